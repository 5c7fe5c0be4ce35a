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

// Exact trigonometric values c(j) = 2cos(pi j / l) and s(j) = 2sin(pi j / l)
// for quarter-integer j, and the cosine matrices built from them. Every value
// lives in Q(zeta_{8l}).

#include <cstdint>

#include "cyc_matrix.hpp"
#include "cyclotomic.hpp"

namespace fusia::trig {

/// Conductor used for all trigonometric values at rank ell.
constexpr std::uint32_t conductor(int ell) { return 8u * static_cast<std::uint32_t>(ell); }

/// c(q/4) for an integer q.
CycNum cos2_quarters(std::int64_t q, int ell);
/// s(q/4) for an integer q.
CycNum sin2_quarters(std::int64_t q, int ell);

/// c(j); throws unless 4j is an integer.
CycNum cos2(const Rational& j, int ell);
CycNum sin2(const Rational& j, int ell);

/// rho_j = 1 / (1 + delta_{0,j} + delta_{l,j}) for 0 <= j <= l.
Rational rho(int j, int ell);
/// rho_{i,j} = rho_i rho_j / (2l).
Rational rho2(int i, int j, int ell);

/// sum_{j=0}^{l} rho_j c(m j), evaluated term by term.
CycNum lemcos_sum_rho(int m, int ell);
/// sum_{j=1}^{l} c((2j-1) m / 2), evaluated term by term.
CycNum lemcos_sum_odd(int m, int ell);

/// M_{i,j} = c(ij), 0 <= i,j <= l.
CycMatrix matrix_M(int ell);
/// N_{i,j} = rho_{i,j} c(ij), the inverse of M.
CycMatrix matrix_N(int ell);
/// X_{i,j} = c((2i-1)(2j-1)/4), 1 <= i,j <= l.
CycMatrix matrix_X(int ell);
/// Omega_{i,j} = c((i-1)(2j-1)/2), 1 <= i,j <= l.
CycMatrix matrix_Omega(int ell);

}  // namespace fusia::trig
