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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "json.hpp"

#include "fusia/fusia.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  fusia_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(fusia_version()).size() > 0);
  fusia_matrix* m = nullptr;
  CHECK(fusia_smatrix(2, &m) == FUSIA_E_INVALID_ARGUMENT);
  CHECK(m == nullptr);
  CHECK(std::string(fusia_last_error()).size() > 0);
  CHECK(fusia_smatrix(3, nullptr) == FUSIA_E_NULL_POINTER);
  CHECK(fusia_matrix_size(nullptr, nullptr, nullptr) == FUSIA_E_NULL_POINTER);
}

TEST_CASE("matrices") {
  fusia_matrix* s = nullptr;
  REQUIRE(fusia_smatrix(3, &s) == FUSIA_OK);
  size_t r = 0, c = 0;
  REQUIRE(fusia_matrix_size(s, &r, &c) == FUSIA_OK);
  CHECK(r == 10);
  CHECK(c == 10);
  double re = 0, im = 1;
  REQUIRE(fusia_matrix_entry_approx(s, 5, 0, &re, &im) == FUSIA_OK);
  CHECK(re == doctest::Approx(1.0));
  CHECK(im == doctest::Approx(0.0));

  char* js = nullptr;
  REQUIRE(fusia_matrix_entry_json(s, 4, 4, &js) == FUSIA_OK);
  const std::string entry = take(js);
  const auto parsed = nlohmann::json::parse(entry);
  CHECK(parsed.contains("conductor"));

  fusia_matrix* oracle = nullptr;
  REQUIRE(fusia_smatrix_oracle(3, 7, &oracle) == FUSIA_OK);
  int eq = 0;
  REQUIRE(fusia_matrix_equal(s, oracle, &eq) == FUSIA_OK);
  CHECK(eq == 1);

  REQUIRE(fusia_matrix_negate_entry(oracle, 4, 4) == FUSIA_OK);
  REQUIRE(fusia_matrix_equal(s, oracle, &eq) == FUSIA_OK);
  CHECK(eq == 0);
  REQUIRE(fusia_matrix_set_entry_json(oracle, 4, 4, entry.c_str()) == FUSIA_OK);
  REQUIRE(fusia_matrix_equal(s, oracle, &eq) == FUSIA_OK);
  CHECK(eq == 1);
  CHECK(fusia_matrix_set_entry_json(oracle, 4, 4, "{") == FUSIA_E_INVALID_ARGUMENT);
  CHECK(fusia_matrix_entry_approx(s, 10, 0, &re, &im) == FUSIA_E_INVALID_ARGUMENT);
  CHECK(fusia_smatrix_oracle(8, 7, &oracle) == FUSIA_E_INVALID_ARGUMENT);

  fusia_matrix* w = nullptr;
  fusia_matrix* rebuilt = nullptr;
  REQUIRE(fusia_w_matrix(3, &w) == FUSIA_OK);
  REQUIRE(fusia_smatrix_with_block(3, w, &rebuilt) == FUSIA_OK);
  REQUIRE(fusia_matrix_equal(s, rebuilt, &eq) == FUSIA_OK);
  CHECK(eq == 1);

  fusia_matrix_free(rebuilt);
  fusia_matrix_free(w);
  fusia_matrix_free(oracle);
  fusia_matrix_free(s);
  fusia_matrix_free(nullptr);
}

TEST_CASE("export") {
  char* out = nullptr;
  REQUIRE(fusia_export(4, "S", "json", 0, 8, &out) == FUSIA_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j.dump().find("nu_0") != std::string::npos);
  REQUIRE(fusia_export(4, "T", "csv", 0, 5, &out) == FUSIA_OK);
  CHECK(take(out).find("nu_0") != std::string::npos);
  CHECK(fusia_export(4, "X", "json", 0, 5, &out) == FUSIA_E_INVALID_ARGUMENT);
  CHECK(fusia_export(4, "s", "xml", 0, 5, &out) == FUSIA_E_INVALID_ARGUMENT);
}

TEST_CASE("algebras") {
  fusia_algebra* v = nullptr;
  REQUIRE(fusia_algebra_voa(4, &v) == FUSIA_OK);
  int n = 0;
  REQUIRE(fusia_algebra_size(v, &n) == FUSIA_OK);
  CHECK(n == 11);
  int a = -1, b = -1;
  REQUIRE(fusia_algebra_index(v, "chi1+", &a) == FUSIA_OK);
  REQUIRE(fusia_algebra_index(v, "chi1-", &b) == FUSIA_OK);
  char* out = nullptr;
  REQUIRE(fusia_algebra_product(v, a, b, &out) == FUSIA_OK);
  CHECK(take(out) == "0- + L- + 2");
  int i2 = -1;
  REQUIRE(fusia_algebra_index(v, "2", &i2) == FUSIA_OK);
  std::int64_t value = -1;
  REQUIRE(fusia_algebra_coefficient(v, a, b, i2, &value) == FUSIA_OK);
  CHECK(value == 1);
  CHECK(fusia_algebra_index(v, "chi3+", &a) == FUSIA_E_INVALID_ARGUMENT);
  int ok = 0;
  REQUIRE(fusia_algebra_check_axioms(v, &ok, nullptr) == FUSIA_OK);
  CHECK(ok == 1);
  REQUIRE(fusia_algebra_table(v, &out) == FUSIA_OK);
  CHECK(take(out).find("chi1+ x chi1- = 0- + L- + 2") != std::string::npos);

  fusia_algebra* af = nullptr;
  REQUIRE(fusia_algebra_affine(4, &af) == FUSIA_OK);
  fusia_matrix* S = nullptr;
  REQUIRE(fusia_Smatrix(4, &S) == FUSIA_OK);
  REQUIRE(fusia_verlinde_check(S, af, &ok) == FUSIA_OK);
  CHECK(ok == 1);
  REQUIRE(fusia_algebra_json(af, &out) == FUSIA_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["labels"].size() == 11);

  fusia_algebra* g = nullptr;
  fusia_algebra* h = nullptr;
  fusia_algebra* t = nullptr;
  REQUIRE(fusia_algebra_group_ring(2, &g) == FUSIA_OK);
  REQUIRE(fusia_algebra_a1_level2(&h) == FUSIA_OK);
  REQUIRE(fusia_algebra_tensor(g, h, &t) == FUSIA_OK);
  REQUIRE(fusia_algebra_size(t, &n) == FUSIA_OK);
  CHECK(n == 6);
  int d = -1;
  REQUIRE(fusia_algebra_dual(t, 1, &d) == FUSIA_OK);
  CHECK(d == 1);
  REQUIRE(fusia_algebra_label(t, 0, &out) == FUSIA_OK);
  CHECK(take(out) == "(g0,0)");

  fusia_matrix* s = nullptr;
  fusia_algebra* fs = nullptr;
  REQUIRE(fusia_smatrix(4, &s) == FUSIA_OK);
  REQUIRE(fusia_algebra_from_smatrix(s, &fs) == FUSIA_OK);
  REQUIRE(fusia_algebra_size(fs, &n) == FUSIA_OK);
  CHECK(n == 11);
  REQUIRE(fusia_matrix_negate_entry(s, 4, 4) == FUSIA_OK);
  fusia_algebra* bad = nullptr;
  const fusia_status st = fusia_algebra_from_smatrix(s, &bad);
  CHECK((st == FUSIA_E_NOT_FUSION || st == FUSIA_E_SINGULAR));
  CHECK(bad == nullptr);

  fusia_matrix_free(s);
  fusia_matrix_free(S);
  for (auto* x : {v, af, g, h, t, fs}) fusia_algebra_free(x);
}

TEST_CASE("verification") {
  int pass = 0;
  char* out = nullptr;
  REQUIRE(fusia_verify_iso(5, nullptr, &pass, &out) == FUSIA_OK);
  CHECK(pass == 1);
  CHECK(nlohmann::json::parse(take(out))["ell"] == 5);
  REQUIRE(fusia_verify_small(1, &pass, &out) == FUSIA_OK);
  CHECK(pass == 1);
  take(out);
  REQUIRE(fusia_verify(3, 1, &pass, &out) == FUSIA_OK);
  CHECK(pass == 1);
  take(out);
  CHECK(fusia_verify_small(3, &pass, &out) == FUSIA_E_INVALID_ARGUMENT);
}
