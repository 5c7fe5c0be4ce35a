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
#pragma once

// Closed-form modular data of D_l^(1) at level 2, rows and columns in the
// order nu_0, nu'_0, nu'_l, nu_l, nu_1, ..., nu_{l-1}, mu_0, ..., mu_3.

#include <string>
#include <vector>

#include "json.hpp"

#include "cyc_matrix.hpp"

namespace fusia::closed {

/// Index helpers for the canonical order.
struct Layout {
  int ell;
  int size() const { return ell + 7; }
  int nu(int i) const;  // 0 <= i <= l
  int nu_prime0() const { return 1; }
  int nu_primeL() const { return 2; }
  int mu(int j) const { return ell + 3 + j; }
};

/// The 4x4 block on the half-integral weights, ordered mu_0..mu_3.
CycMatrix w_matrix(int ell);

/// The full character table (row-normalized s-matrix).
CycMatrix smatrix_closed(int ell);
/// As smatrix_closed but with a caller-supplied 4x4 block in place of
/// w_matrix(ell); used to show the checks reject perturbed tables.
CycMatrix smatrix_with_block(int ell, const CycMatrix& w);

/// First row (= first column) of the unitary S-matrix; all positive reals.
std::vector<CycNum> s_first_row(int ell);
/// S = diag(first column) * s.
CycMatrix S_matrix(int ell);
/// Diagonal of T in canonical order.
std::vector<CycNum> T_matrix(int ell);
/// The global phase of T.
CycNum t_phase(int ell);

/// Row/column labels of the canonical order.
std::vector<std::string> order_labels(int ell);

/// {"ell": l, "order": [...], "entries": [[CycNum...]...]}
nlohmann::ordered_json matrix_json(int ell, const CycMatrix& m);
/// Diagonal export: {"ell": l, "order": [...], "diagonal": [CycNum...]}
nlohmann::ordered_json diagonal_json(int ell, const std::vector<CycNum>& d);
/// As matrix_json / diagonal_json with entries as "a+bi" strings rounded to
/// the requested number of decimals.
nlohmann::ordered_json matrix_json_numeric(int ell, const CycMatrix& m, int digits);
nlohmann::ordered_json diagonal_json_numeric(int ell, const std::vector<CycNum>& d,
                                             int digits);
/// Numeric CSV with a header row of labels; entries as a+bi with the
/// requested number of decimals.
std::string matrix_csv(int ell, const CycMatrix& m, int digits);
std::string diagonal_csv(int ell, const std::vector<CycNum>& d, int digits);

}  // namespace fusia::closed
