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

// Brute-force evaluation of the Kac-Peterson sum for D_l^(1) at level 2 over
// the Weyl group of type D_l (signed permutations with an even number of
// sign changes). This is the independent oracle for the closed forms.

#include <vector>

#include "cyc_matrix.hpp"
#include "weights.hpp"

namespace fusia::kp {

/// A Weyl group element of type D: permutation plus an even sign vector.
struct SignedPerm {
  std::vector<int> perm;   // images of 0..l-1
  std::vector<int> flips;  // +1 / -1, even number of -1

  int rank() const { return static_cast<int>(perm.size()); }
  /// Sign of the underlying permutation.
  int perm_sign() const;
  bool valid() const;
};

/// All 2^(l-1) l! elements in enumeration order (permutations
/// lexicographically, sign vectors Gray coded on the first l-1 slots).
std::vector<SignedPerm> weyl_group_D(int ell);

struct OracleOptions {
  /// Largest rank for which the brute-force sum is attempted.
  int max_ell = 7;
};

/// The unnormalized Kac-Peterson entry
///   sum_{sigma, f} sign(sigma) zeta_{2l}^{-(lambda | sigma(mu)^f)},
/// exact at conductor 8l.
CycNum weyl_sum(const Weight& lambda, const Weight& mu,
                const OracleOptions& opts = {});

/// The same quantity as weyl_sum from (1/2) det R^{lambda,mu} where
/// R_{ij} = zeta^{lambda_i mu_j} + zeta^{-lambda_i mu_j}. Throws
/// NotApplicable outside the integral / zero-coordinate cases.
CycNum det_shortcut(const Weight& lambda, const Weight& mu);
bool det_shortcut_applicable(const Weight& lambda, const Weight& mu);
/// R^{lambda,mu} itself.
CycMatrix r_matrix(const Weight& lambda, const Weight& mu);

/// Matrix of weyl_sum over all pairs in canonical weight order.
CycMatrix kp_unnormalized(int ell, const OracleOptions& opts = {});
/// Row-normalized s-matrix s_{lambda,mu} = S_{lambda,mu} / S_{lambda,nu_0}.
CycMatrix smatrix_oracle(int ell, const OracleOptions& opts = {});
/// Row-normalizes an unnormalized Kac-Peterson matrix.
CycMatrix normalize_rows(const CycMatrix& kp);

}  // namespace fusia::kp
