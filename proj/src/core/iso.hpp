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

// Comparison of the V_L^+ fusion ring with the affine fusion ring of
// D_l^(1) at level 2.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyc_matrix.hpp"
#include "fusion.hpp"
#include "voa.hpp"
#include "weights.hpp"

namespace fusia::iso {

/// Module label -> weight, as index vector: entry p is the weight position
/// of the module at position p of voa::ordered_labels. Requires l >= 3.
std::vector<int> canonical_bijection(int ell);
/// Same map as label pairs.
std::vector<std::pair<voa::VOALabel, Weight>> canonical_pairs(int ell);

struct IsoOptions {
  /// Character table to test; defaults to closed::smatrix_closed(l).
  std::optional<CycMatrix> smatrix;
  /// Replacement for canonical_bijection.
  std::optional<std::vector<int>> bijection;
};

struct IsoReport {
  int ell = 0;
  bool pass = false;
  bool tensor_match = false;   // transported VOA tensor = affine tensor
  bool columns_match = false;  // every rule holds on the s-columns
  bool dual_match = false;     // the bijection intertwines the dualities
  std::size_t checked_rules = 0;
  std::vector<std::string> failures;

  nlohmann::ordered_json to_json() const;
};

IsoReport verify_iso(int ell, const IsoOptions& opts = {});

/// conj(column i) = column dual(i) for every i.
bool conjugation_is_dual(const CycMatrix& s, const FusionAlgebra& f);

/// True if perm (index in f -> index in g) is a fusion-ring isomorphism.
bool is_isomorphism(const FusionAlgebra& f, const FusionAlgebra& g,
                    const std::vector<int>& perm);

/// Multiplicative order of an invertible basis element; 0 if b_i is not
/// invertible.
int element_order(const FusionAlgebra& f, int i);

struct SmallReport {
  int ell = 0;
  bool pass = false;
  /// Pairs (VOA label, target label) of the isomorphism found.
  std::vector<std::pair<std::string, std::string>> mapping;
  /// For l = 1: the VOA element sent to the generator g1.
  std::string generator;
  std::string detail;

  nlohmann::ordered_json to_json() const;
};

/// l = 1: voa_algebra(1) against target (default group_ring(8)) by
/// generator search. l = 2: voa_algebra(2) against target (default
/// a1_level2() x a1_level2()) by a unit- and dual-preserving bijection search.
SmallReport verify_small(int ell, const std::optional<FusionAlgebra>& target = {});

}  // namespace fusia::iso
