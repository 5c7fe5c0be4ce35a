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
#include "trig.hpp"

namespace fusia::trig {

namespace {

void check_ell(int ell) {
  if (ell < 1) throw InvalidArgument("ell must be positive");
}

std::int64_t quarters_of(const Rational& j) {
  Rational q = j * 4;
  if (q.get_den() != 1) throw InvalidArgument("argument must lie in (1/4)Z");
  if (!q.get_num().fits_slong_p()) throw InvalidArgument("argument too large");
  return q.get_num().get_si();
}

}  // namespace

CycNum cos2_quarters(std::int64_t q, int ell) {
  check_ell(ell);
  const std::uint32_t n = conductor(ell);
  std::vector<std::int64_t> counts(n, 0);
  const std::int64_t e = ((q % n) + n) % n;
  counts[e] += 1;
  counts[(n - e) % n] += 1;
  return CycNum::from_power_counts(n, counts);
}

CycNum sin2_quarters(std::int64_t q, int ell) {
  check_ell(ell);
  const std::uint32_t n = conductor(ell);
  std::vector<std::int64_t> counts(n, 0);
  const std::int64_t e = ((q % n) + n) % n;
  // zeta^q - zeta^-q = i s(q/4)  =>  s = -i (zeta^q - zeta^-q), with
  // -i = zeta_{8l}^{6l}.
  const std::int64_t minus_i = 6 * static_cast<std::int64_t>(ell);
  counts[(e + minus_i) % n] += 1;
  counts[((n - e) % n + minus_i) % n] -= 1;
  return CycNum::from_power_counts(n, counts);
}

CycNum cos2(const Rational& j, int ell) { return cos2_quarters(quarters_of(j), ell); }

CycNum sin2(const Rational& j, int ell) { return sin2_quarters(quarters_of(j), ell); }

Rational rho(int j, int ell) {
  check_ell(ell);
  if (j < 0 || j > ell) throw InvalidArgument("rho index out of range");
  int denom = 1 + (j == 0) + (j == ell);
  return Rational(1, denom);
}

Rational rho2(int i, int j, int ell) {
  return rho(i, ell) * rho(j, ell) / Rational(2 * ell);
}

CycNum lemcos_sum_rho(int m, int ell) {
  check_ell(ell);
  if (m < 0 || m > 2 * ell) throw InvalidArgument("m out of range [0, 2l]");
  CycNum sum;
  for (int j = 0; j <= ell; ++j)
    sum += cos2_quarters(4LL * m * j, ell).scaled(rho(j, ell));
  return sum;
}

CycNum lemcos_sum_odd(int m, int ell) {
  check_ell(ell);
  if (m < 0 || m > 2 * ell) throw InvalidArgument("m out of range [0, 2l]");
  CycNum sum;
  for (int j = 1; j <= ell; ++j) sum += cos2_quarters(2LL * (2 * j - 1) * m, ell);
  return sum;
}

CycMatrix matrix_M(int ell) {
  check_ell(ell);
  CycMatrix m(ell + 1, ell + 1);
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= ell; ++j) m(i, j) = cos2_quarters(4LL * i * j, ell);
  return m;
}

CycMatrix matrix_N(int ell) {
  check_ell(ell);
  CycMatrix m(ell + 1, ell + 1);
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= ell; ++j)
      m(i, j) = cos2_quarters(4LL * i * j, ell).scaled(rho2(i, j, ell));
  return m;
}

CycMatrix matrix_X(int ell) {
  check_ell(ell);
  CycMatrix m(ell, ell);
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j)
      m(i - 1, j - 1) = cos2_quarters(static_cast<std::int64_t>(2 * i - 1) * (2 * j - 1), ell);
  return m;
}

CycMatrix matrix_Omega(int ell) {
  check_ell(ell);
  CycMatrix m(ell, ell);
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j)
      m(i - 1, j - 1) = cos2_quarters(2LL * (i - 1) * (2 * j - 1), ell);
  return m;
}

}  // namespace fusia::trig
