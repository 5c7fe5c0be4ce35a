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

// Fusion rules of V_L^+ for L = sqrt(2l) Z, l >= 1.

#include <string>
#include <vector>

#include "fusion.hpp"

namespace fusia::voa {

struct VOALabel {
  enum class Kind { kInner, kBoundary, kTwist };
  Kind kind = Kind::kInner;
  /// Inner: i in [1, l-1]. Boundary: 0 or l. Twist: 1 or 2 (chi_1, chi_2).
  int which = 0;
  /// +1 or -1; always +1 for inner labels.
  int sign = 1;

  static VOALabel inner(int i) { return {Kind::kInner, i, 1}; }
  static VOALabel boundary(int which, int sign) { return {Kind::kBoundary, which, sign}; }
  static VOALabel twist(int which, int sign) { return {Kind::kTwist, which, sign}; }

  bool valid(int ell) const;
  /// "i:3", "0+", "L-", "chi1+".
  std::string to_string() const;
  /// As to_string but inner labels print as the bare number.
  std::string short_name() const;

  friend bool operator==(const VOALabel&, const VOALabel&) = default;
};

/// Parses "i:3" or "3", "0+", "0-", "L+", "L-" (or the value of l with a
/// sign), "chi1+", "chi1-", "chi2+", "chi2-". Throws InvalidArgument.
VOALabel parse_label(const std::string& text, int ell);

/// Reduces m modulo 2l and reflects into [0, l]. A result of 0 or l is a
/// boundary marker standing for the sum of both signed labels.
int canonicalize(int m, int ell);

/// The l+7 labels in the order [0]+, [0]-, [l]+, [l]-, [1..l-1],
/// [chi2]+, [chi1]+, [chi1]-, [chi2]-.
std::vector<VOALabel> ordered_labels(int ell);
int label_position(const VOALabel& a, int ell);

struct Product {
  /// Name of the rule that was applied, e.g. "chi1 x chi1 (l even)".
  std::string rule;
  /// Expanded to irreducibles; may repeat.
  std::vector<VOALabel> terms;
};

/// a x b by the rule table; the arguments may come in either order.
Product fuse(const VOALabel& a, const VOALabel& b, int ell);

/// Ordered pairs (a, b) whose left-hand side appears literally in the rule
/// list, for every choice of indices and signs.
struct RuleInstance {
  VOALabel a, b;
  Product product;
};
std::vector<RuleInstance> rule_instances(int ell);

/// Full fusion ring in ordered_labels order with labels from to_string().
/// Throws InternalError if the result violates a fusion-algebra axiom.
FusionAlgebra voa_algebra(int ell);

/// b_i b_j of a voa_algebra as "0- + L- + 2".
std::string format_product(const FusionAlgebra& f, int i, int j);
/// Terms of a Product as "0- + L- + 2", in canonical order.
std::string format_terms(const std::vector<VOALabel>& terms, int ell);

}  // namespace fusia::voa
