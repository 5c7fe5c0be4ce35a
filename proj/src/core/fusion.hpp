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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyc_matrix.hpp"

namespace fusia {

/// A based commutative ring with unit at index 0, structure constants
/// N[i][j][k] and a duality involution.
class FusionAlgebra {
 public:
  FusionAlgebra() = default;
  /// tensor is n*n*n in (i, j, k) row-major order. No validation beyond
  /// shapes; use check_axioms.
  FusionAlgebra(std::vector<std::string> labels, std::vector<std::int64_t> tensor,
                std::vector<int> dual);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  /// Index of a label, -1 if absent.
  int index_of(const std::string& label) const;
  std::int64_t N(int i, int j, int k) const {
    return tensor_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }
  const std::vector<std::int64_t>& tensor() const { return tensor_; }
  int dual(int i) const { return dual_.at(i); }
  const std::vector<int>& duals() const { return dual_; }

  /// Nonzero terms (k, N_ij^k) of b_i b_j in increasing k.
  std::vector<std::pair<int, std::int64_t>> product(int i, int j) const;
  /// "a + b + 2*c"; "0" for the empty sum.
  std::string product_string(int i, int j) const;
  /// One line "a x b = ..." per ordered pair with i <= j.
  std::string table_string() const;

  /// {"labels": [...], "dual": [...], "N": [[[...]]]}
  nlohmann::ordered_json to_json() const;

  /// Same algebra with N_{ij}^k altered; used to exercise the checkers.
  FusionAlgebra with_entry(int i, int j, int k, std::int64_t value) const;

  friend bool operator==(const FusionAlgebra&, const FusionAlgebra&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::int64_t> tensor_;
  std::vector<int> dual_;
};

/// Structure constants of the ring spanned by the columns of s under
/// componentwise multiplication. Column 0 must be all ones. Throws
/// SingularMatrix, NotFusionMatrix (with the offending i, j, k) or
/// InvalidArgument. Labels default to "b0", "b1", ...
FusionAlgebra from_smatrix(const CycMatrix& s,
                           std::vector<std::string> labels = {});

/// Permutation i -> the unique j with N_ij^0 = 1; throws NotFusionMatrix if
/// no such unique j exists.
std::vector<int> dual_from_tensor(int n, const std::vector<std::int64_t>& tensor);

/// Charge conjugation read off S^2: the permutation p with (S^2)_{i,p(i)} = 1.
/// Throws InvalidArgument if S^2 is not a permutation matrix.
std::vector<int> involution_from_s(const CycMatrix& S);

struct Mismatch {
  int i, j, k;
  std::int64_t expected;
  std::string got;
};

struct VerlindeReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
};

/// Recomputes every N_ij^m as sum_k S_ki S_kj conj(S_km) / S_k0.
VerlindeReport verlinde_check(const CycMatrix& S, const FusionAlgebra& f);

struct AxiomReport {
  std::vector<std::string> violations;
  /// Violations beyond the first few are only counted.
  std::size_t total = 0;
  bool ok() const { return total == 0; }
};

AxiomReport check_axioms(const FusionAlgebra& f);

/// Z[Z/n]: b_i b_j = b_{i+j mod n}.
FusionAlgebra group_ring(int n);
/// Basis pairs in row-major order, labels "(a,b)".
FusionAlgebra tensor_product(const FusionAlgebra& f, const FusionAlgebra& g);
/// A_1 at level 2 from its 3x3 Kac-Peterson matrix; labels "0", "1", "2" by
/// the level-2 weight, so "2" is invertible and "1" squares to 0 + 2.
FusionAlgebra a1_level2();

}  // namespace fusia
