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

#include <cstddef>
#include <vector>

#include "cyclotomic.hpp"

namespace fusia {

/// Dense row-major matrix over the cyclotomic numbers.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CycMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  CycNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<CycNum> column(std::size_t j) const;

  /// Least common conductor of all entries.
  std::uint32_t conductor() const;
  /// Embeds every entry at the common conductor (speeds up arithmetic).
  CycMatrix& unify();

  CycMatrix transpose() const;
  CycMatrix conj_transpose() const;
  CycMatrix conj() const;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  CycMatrix scaled(const CycNum& c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CycNum> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination, pivoting on
/// the first nonzero entry of each column.
CycNum det(const CycMatrix& m);

/// Solves m x = b exactly by Gauss-Jordan elimination; throws
/// SingularMatrix when m is not invertible.
std::vector<CycNum> solve(const CycMatrix& m, std::vector<CycNum> b);

}  // namespace fusia
