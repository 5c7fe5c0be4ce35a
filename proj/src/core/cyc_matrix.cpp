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
#include "cyc_matrix.hpp"

#include <utility>

namespace fusia {

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1L);
  return m;
}

std::vector<CycNum> CycMatrix::column(std::size_t j) const {
  std::vector<CycNum> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::uint32_t CycMatrix::conductor() const {
  std::uint64_t n = 1;
  for (const auto& x : data_) n = lcm_u64(n, x.conductor());
  return static_cast<std::uint32_t>(n);
}

CycMatrix& CycMatrix::unify() {
  const auto n = conductor();
  for (auto& x : data_) x = x.embed(n);
  return *this;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CycMatrix CycMatrix::conj() const {
  CycMatrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

CycMatrix CycMatrix::conj_transpose() const { return conj().transpose(); }

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch");
  CycMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  return c;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidArgument("matrix shape mismatch");
  CycMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidArgument("matrix shape mismatch");
  CycMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

CycMatrix CycMatrix::scaled(const CycNum& c) const {
  CycMatrix t = *this;
  for (auto& x : t.data_) x = x * c;
  return t;
}

CycNum det(const CycMatrix& m) {
  if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return CycNum(1L);
  CycMatrix a = m;
  a.unify();
  CycNum prev(1L);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return CycNum(0L);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    const CycNum prev_inv = prev.inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycNum v = a(k, k) * a(i, j);
        if (!a(i, k).is_zero() && !a(k, j).is_zero()) v -= a(i, k) * a(k, j);
        a(i, j) = v * prev_inv;
      }
      a(i, k) = CycNum(0L);
    }
    prev = a(k, k);
  }
  CycNum d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

std::vector<CycNum> solve(const CycMatrix& m, std::vector<CycNum> b) {
  if (!m.square() || b.size() != m.rows())
    throw InvalidArgument("solve: shape mismatch");
  const std::size_t n = m.rows();
  CycMatrix a = m;
  a.unify();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw SingularMatrix("matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(b[k], b[p]);
    }
    const CycNum pivot_inv = a(k, k).inv();
    for (std::size_t j = k; j < n; ++j) a(k, j) = a(k, j) * pivot_inv;
    b[k] = b[k] * pivot_inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const CycNum factor = a(i, k);
      for (std::size_t j = k; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= factor * a(k, j);
      b[i] -= factor * b[k];
    }
  }
  return b;
}

}  // namespace fusia
