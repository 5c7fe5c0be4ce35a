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

#include <string>
#include <vector>

#include "json.hpp"

#include "cyclotomic.hpp"
#include "half_int.hpp"

namespace fusia {

/// Which named element of the rho-shifted level-2 weight set this is.
enum class WeightKind { kNu, kNuPrime0, kNuPrimeL, kMu };

enum class WeightClass { kZ, kH };

/// A rho-shifted dominant weight of D_l^(1) at level 2. Coordinates are on
/// the orthonormal basis v_1..v_l listed in reverse order, so the rho
/// shift reads (0, 1, ..., l-1).
struct Weight {
  std::vector<HalfInt> entries;
  WeightKind kind = WeightKind::kNu;
  /// i for nu_i, j for mu_j; unused for the primed weights.
  int index = 0;

  int rank() const { return static_cast<int>(entries.size()); }
  WeightClass klass() const;
  /// "nu_3", "nu'_0", "nu'_5", "mu_2" (with the rank substituted for l).
  std::string label() const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// The l+7 weights in the order nu_0, nu'_0, nu'_l, nu_l, nu_1..nu_{l-1},
/// mu_0..mu_3. Requires l >= 3.
std::vector<Weight> enumerate_weights(int ell);

/// Position of a label produced by Weight::label() in enumerate_weights(ell);
/// -1 when unknown.
int weight_position(const std::string& label, int ell);

/// Standard bilinear form on the orthonormal coordinates.
Rational bilinear(const Weight& a, const Weight& b);
/// 4 (a|b), always an integer.
std::int64_t bilinear_quarters(const Weight& a, const Weight& b);

}  // namespace fusia
