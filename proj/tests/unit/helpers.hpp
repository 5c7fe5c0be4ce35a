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

#include <complex>
#include <random>

#include "cyc_matrix.hpp"

namespace fusia::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261019);
  return gen;
}

/// Random element of Q(zeta_n) with a few small rational coefficients.
inline CycNum random_cyc(std::uint32_t n, int terms = 3) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::uniform_int_distribution<std::int64_t> exp(0, n - 1);
  CycNum x;
  for (int t = 0; t < terms; ++t)
    x += CycNum::root_of_unity(n, exp(rng())).scaled(Rational(num(rng()), den(rng())));
  return x;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

/// Value of zeta_n^k in floating point.
inline std::complex<double> zeta(int n, long k) {
  const double t = 2.0 * 3.14159265358979323846 * static_cast<double>(k) / n;
  return {std::cos(t), std::sin(t)};
}

}  // namespace fusia::testing
