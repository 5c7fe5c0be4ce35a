/* Copyright (C) 2026 The fusia Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef FUSIA_FUSIA_H_
#define FUSIA_FUSIA_H_

/* C interface to the fusia library. Every function returns a status code;
 * on failure fusia_last_error() describes the problem (per thread). Strings
 * returned through char** are owned by the caller and released with
 * fusia_string_free. Handles are released with their *_free function. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FUSIA_BUILDING_LIBRARY)
#define FUSIA_API __attribute__((visibility("default")))
#else
#define FUSIA_API
#endif

typedef enum fusia_status {
  FUSIA_OK = 0,
  FUSIA_E_INVALID_ARGUMENT = 1,
  FUSIA_E_DIVISION_BY_ZERO = 2,
  FUSIA_E_NOT_APPLICABLE = 3,
  FUSIA_E_NOT_FUSION = 4,
  FUSIA_E_SINGULAR = 5,
  FUSIA_E_INTERNAL = 6,
  FUSIA_E_NULL_POINTER = 7
} fusia_status;

typedef struct fusia_matrix fusia_matrix;
typedef struct fusia_algebra fusia_algebra;

FUSIA_API const char* fusia_version(void);
FUSIA_API const char* fusia_last_error(void);
FUSIA_API void fusia_string_free(char* s);

/* ---- matrices ---- */

/* Closed-form character table s (rows normalized so column 0 is all ones). */
FUSIA_API fusia_status fusia_smatrix(int ell, fusia_matrix** out);
/* Unitary S-matrix. */
FUSIA_API fusia_status fusia_Smatrix(int ell, fusia_matrix** out);
/* Character table from brute-force Weyl sums; 3 <= ell <= max_ell. */
FUSIA_API fusia_status fusia_smatrix_oracle(int ell, int max_ell, fusia_matrix** out);
/* The 4x4 block on the half-integral weights. */
FUSIA_API fusia_status fusia_w_matrix(int ell, fusia_matrix** out);
/* s with the 4x4 half-integral block replaced by w. */
FUSIA_API fusia_status fusia_smatrix_with_block(int ell, const fusia_matrix* w,
                                                fusia_matrix** out);
FUSIA_API fusia_status fusia_matrix_size(const fusia_matrix* m, size_t* rows,
                                         size_t* cols);
/* Entry as {"conductor": N, "coeffs": [["num","den"], ...]}. */
FUSIA_API fusia_status fusia_matrix_entry_json(const fusia_matrix* m, size_t i,
                                               size_t j, char** out);
FUSIA_API fusia_status fusia_matrix_set_entry_json(fusia_matrix* m, size_t i,
                                                   size_t j, const char* json);
FUSIA_API fusia_status fusia_matrix_entry_approx(const fusia_matrix* m, size_t i,
                                                 size_t j, double* re, double* im);
FUSIA_API fusia_status fusia_matrix_negate_entry(fusia_matrix* m, size_t i, size_t j);
FUSIA_API fusia_status fusia_matrix_equal(const fusia_matrix* a,
                                          const fusia_matrix* b, int* equal);
FUSIA_API void fusia_matrix_free(fusia_matrix* m);

/* Export of s, S or T ("s", "S", "T") as "json" or "csv". exact != 0 emits
 * exact JSON (csv is always numeric); otherwise entries are rounded to
 * `digits` decimals. */
FUSIA_API fusia_status fusia_export(int ell, const char* form, const char* format,
                                    int exact, int digits, char** out);

/* ---- fusion algebras ---- */

FUSIA_API fusia_status fusia_algebra_from_smatrix(const fusia_matrix* s,
                                                  fusia_algebra** out);
/* Fusion ring of the affine algebra at level 2, basis labelled by weights. */
FUSIA_API fusia_status fusia_algebra_affine(int ell, fusia_algebra** out);
/* Fusion ring of V_L^+, L = sqrt(2 ell) Z, for ell >= 1. */
FUSIA_API fusia_status fusia_algebra_voa(int ell, fusia_algebra** out);
FUSIA_API fusia_status fusia_algebra_group_ring(int n, fusia_algebra** out);
FUSIA_API fusia_status fusia_algebra_a1_level2(fusia_algebra** out);
FUSIA_API fusia_status fusia_algebra_tensor(const fusia_algebra* a,
                                            const fusia_algebra* b,
                                            fusia_algebra** out);
FUSIA_API fusia_status fusia_algebra_size(const fusia_algebra* a, int* n);
FUSIA_API fusia_status fusia_algebra_coefficient(const fusia_algebra* a, int i,
                                                 int j, int k, int64_t* value);
FUSIA_API fusia_status fusia_algebra_dual(const fusia_algebra* a, int i, int* d);
FUSIA_API fusia_status fusia_algebra_label(const fusia_algebra* a, int i, char** out);
/* Index of a label; for VOA algebras the short forms ("3", "L+", "5+") are
 * accepted as well. */
FUSIA_API fusia_status fusia_algebra_index(const fusia_algebra* a, const char* label,
                                           int* index);
/* b_i b_j as "a + b + 2*c". */
FUSIA_API fusia_status fusia_algebra_product(const fusia_algebra* a, int i, int j,
                                             char** out);
/* One line per unordered pair: "a x b = ...". */
FUSIA_API fusia_status fusia_algebra_table(const fusia_algebra* a, char** out);
/* {"labels": [...], "dual": [...], "N": [[[...]]]} */
FUSIA_API fusia_status fusia_algebra_json(const fusia_algebra* a, char** out);
/* ok = 1 if every axiom holds; report (optional) lists violations. */
FUSIA_API fusia_status fusia_algebra_check_axioms(const fusia_algebra* a, int* ok,
                                                  char** report);
/* Exact Verlinde recomputation against S. */
FUSIA_API fusia_status fusia_verlinde_check(const fusia_matrix* S,
                                            const fusia_algebra* a, int* ok);
FUSIA_API void fusia_algebra_free(fusia_algebra* a);

/* ---- verification ---- */

/* Isomorphism check for ell >= 3; s may be NULL for the closed form. */
FUSIA_API fusia_status fusia_verify_iso(int ell, const fusia_matrix* s, int* pass,
                                        char** report);
/* ell = 1 or 2. */
FUSIA_API fusia_status fusia_verify_small(int ell, int* pass, char** report);
/* Full per-ell suite; oracle != 0 adds the Weyl-sum comparisons. */
FUSIA_API fusia_status fusia_verify(int ell, int oracle, int* pass, char** report);

#ifdef __cplusplus
}
#endif

#endif /* FUSIA_FUSIA_H_ */
