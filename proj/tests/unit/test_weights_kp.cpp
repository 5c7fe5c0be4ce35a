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
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "closed_form.hpp"
#include "helpers.hpp"
#include "kac_peterson.hpp"
#include "trig.hpp"
#include "weights.hpp"

using namespace fusia;
using fusia::testing::close;

namespace {

std::vector<std::int64_t> doubled(const Weight& w) {
  std::vector<std::int64_t> out;
  for (auto h : w.entries) out.push_back(h.doubled);
  return out;
}

// Plain floating-point Weyl sum over every permutation and every even
// sign pattern.
std::complex<double> float_weyl_sum(const Weight& a, const Weight& b) {
  const int ell = a.rank();
  const auto x = doubled(a), y = doubled(b);
  std::vector<int> p(ell);
  std::iota(p.begin(), p.end(), 0);
  std::complex<double> total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j) inv += p[i] > p[j];
    const double eps = inv % 2 ? -1 : 1;
    for (int mask = 0; mask < (1 << ell); ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      long e = 0;
      for (int i = 0; i < ell; ++i) e += ((mask >> i) & 1 ? -1 : 1) * x[i] * y[p[i]];
      total += eps * testing::zeta(8 * ell, -e);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("weights for l = 3") {
  const auto ws = enumerate_weights(3);
  REQUIRE(ws.size() == 10);
  const std::vector<std::vector<std::int64_t>> expected{
      {0, 2, 4}, {0, 2, 8}, {-2, 4, 6}, {2, 4, 6}, {0, 2, 6},
      {0, 4, 6}, {1, 3, 5}, {-1, 3, 5}, {1, 3, 7}, {-1, 3, 7}};
  const std::vector<std::string> labels{"nu_0", "nu'_0", "nu'_3", "nu_3", "nu_1",
                                        "nu_2", "mu_0",  "mu_1",  "mu_2", "mu_3"};
  for (std::size_t k = 0; k < ws.size(); ++k) {
    CHECK(doubled(ws[k]) == expected[k]);
    CHECK(ws[k].label() == labels[k]);
    CHECK(weight_position(labels[k], 3) == static_cast<int>(k));
  }
  CHECK(weight_position("nu_9", 3) == -1);
  CHECK(ws[1].to_json().dump() == R"({"label":"nu'_0","entries_doubled":[0,2,8]})");
  CHECK_THROWS_AS(enumerate_weights(2), InvalidArgument);
}

TEST_CASE("weight structure for general l") {
  for (int ell = 3; ell <= 12; ++ell) {
    const auto ws = enumerate_weights(ell);
    CHECK(ws.size() == static_cast<std::size_t>(ell + 7));
    int z = 0, h = 0;
    for (const auto& w : ws) {
      const bool all_int = std::all_of(w.entries.begin(), w.entries.end(),
                                       [](HalfInt x) { return x.integral(); });
      const bool none_int = std::none_of(w.entries.begin(), w.entries.end(),
                                         [](HalfInt x) { return x.integral(); });
      CHECK((all_int || none_int));
      (w.klass() == WeightClass::kZ ? z : h)++;
      CHECK((w.klass() == WeightClass::kZ) == all_int);
    }
    CHECK(z == ell + 3);
    CHECK(h == 4);
    // nu_1 = (0, 1, ..., l-2, l)
    std::vector<std::int64_t> nu1;
    for (int i = 0; i < ell - 1; ++i) nu1.push_back(2 * i);
    nu1.push_back(2 * ell);
    CHECK(doubled(ws[closed::Layout{ell}.nu(1)]) == nu1);
    // nu_0 / nu'_0 differ only in the last coordinate, nu_l / nu'_l only in the first.
    const auto a = doubled(ws[0]), b = doubled(ws[1]), c = doubled(ws[3]), d = doubled(ws[2]);
    CHECK(std::equal(a.begin(), a.end() - 1, b.begin()));
    CHECK(std::equal(c.begin() + 1, c.end(), d.begin() + 1));
  }
}

TEST_CASE("bilinear form") {
  const auto ws = enumerate_weights(3);
  CHECK(bilinear(ws[0], ws[0]) == 5);
  CHECK(bilinear(ws[6], ws[6]) == Rational(35, 4));
  for (const auto& a : ws)
    for (const auto& b : ws) {
      CHECK(bilinear(a, b) == bilinear(b, a));
      CHECK(bilinear(a, b) * 4 == bilinear_quarters(a, b));
    }
  CHECK_THROWS_AS(bilinear(ws[0], enumerate_weights(4)[0]), InvalidArgument);
}

TEST_CASE("Weyl group of type D") {
  for (int ell = 1; ell <= 5; ++ell) {
    const auto g = kp::weyl_group_D(ell);
    long order = 1;
    for (int k = 2; k <= ell; ++k) order *= k;
    order <<= (ell - 1);
    CHECK(static_cast<long>(g.size()) == order);
    for (const auto& s : g) CHECK(s.valid());
  }
  kp::SignedPerm odd{{0, 1}, {-1, 1}};
  CHECK_FALSE(odd.valid());
  CHECK(kp::SignedPerm{{1, 0, 2}, {1, 1, 1}}.perm_sign() == -1);
}

TEST_CASE("Weyl sums against a floating-point evaluation") {
  for (int ell : {3, 4}) {
    const auto ws = enumerate_weights(ell);
    for (const auto& a : ws)
      for (const auto& b : ws) CHECK(close(kp::weyl_sum(a, b).to_complex(), float_weyl_sum(a, b), 1e-8));
  }
}

TEST_CASE("Weyl sum symmetries and zeros") {
  for (int ell = 3; ell <= 5; ++ell) {
    const CycMatrix k = kp::kp_unnormalized(ell);
    CHECK(k == k.transpose());
    const closed::Layout lay{ell};
    for (int j = 0; j < 4; ++j) {
      for (int i = 1; i < ell; ++i) CHECK(k(lay.nu(i), lay.mu(j)).is_zero());
      CHECK(k(lay.nu(ell), lay.mu(j)) == -k(lay.nu_primeL(), lay.mu(j)));
      CHECK(k(lay.nu(0), lay.mu(j)) == -k(lay.nu_prime0(), lay.mu(j)));
    }
  }
  kp::OracleOptions small;
  small.max_ell = 3;
  CHECK_THROWS_AS(kp::weyl_sum(enumerate_weights(4)[0], enumerate_weights(4)[0], small),
                  InvalidArgument);
}

TEST_CASE("determinant shortcut") {
  for (int ell = 3; ell <= 5; ++ell) {
    const auto ws = enumerate_weights(ell);
    int applicable = 0;
    for (const auto& a : ws)
      for (const auto& b : ws) {
        if (!kp::det_shortcut_applicable(a, b)) {
          CHECK_THROWS_AS(kp::det_shortcut(a, b), NotApplicable);
          continue;
        }
        ++applicable;
        CHECK(kp::det_shortcut(a, b) == kp::weyl_sum(a, b));
      }
    CHECK(applicable > 0);
    const closed::Layout lay{ell};
    CHECK_THROWS_AS(kp::det_shortcut(ws[lay.mu(0)], ws[lay.mu(0)]), NotApplicable);
    // R for nu'_0 and nu_0 coincide on integral weights, likewise nu'_l and nu_l.
    for (int c = 0; c < ell + 3; ++c) {
      CHECK(kp::r_matrix(ws[lay.nu_prime0()], ws[c]) == kp::r_matrix(ws[0], ws[c]));
      CHECK(kp::r_matrix(ws[lay.nu_primeL()], ws[c]) == kp::r_matrix(ws[lay.nu(ell)], ws[c]));
    }
  }
  const auto ws4 = enumerate_weights(4);
  const closed::Layout lay4{4};
  CHECK(kp::det_shortcut(ws4[lay4.nu(1)], ws4[lay4.mu(0)]).is_zero());
}

TEST_CASE("oracle s-matrix") {
  const CycMatrix s = kp::smatrix_oracle(4);
  const std::vector<long> row{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2};
  for (std::size_t j = 0; j < row.size(); ++j) CHECK(s(0, j) == CycNum(row[j]));
  for (int ell = 3; ell <= 5; ++ell) {
    const CycMatrix so = kp::smatrix_oracle(ell);
    const closed::Layout lay{ell};
    for (int i = 0; i <= ell; ++i)
      for (int j = 0; j <= ell; ++j)
        CHECK(so(lay.nu(i), lay.nu(j)) ==
              trig::cos2_quarters(4LL * i * j, ell).scaled(trig::rho(j, ell)));
  }
}
