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
#include "kac_peterson.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "parallel.hpp"
#include "trig.hpp"

namespace fusia::kp {

namespace {

int inversion_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

void check_pair(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw InvalidArgument("weights of different rank: " + a.label() + ", " +
                          b.label());
  if (a.rank() < 1) throw InvalidArgument("empty weight");
}

// Adds every Weyl-group term whose permutation starts with `head` into
// counts (indexed by the exponent of zeta_{8l}).
void accumulate_chunk(const std::vector<std::int64_t>& a,
                      const std::vector<std::int64_t>& b, int head,
                      std::vector<std::int64_t>& counts) {
  const int ell = static_cast<int>(a.size());
  const std::int64_t n = static_cast<std::int64_t>(counts.size());
  std::vector<int> perm;
  perm.push_back(head);
  for (int v = 0; v < ell; ++v)
    if (v != head) perm.push_back(v);
  std::vector<std::int64_t> p(ell);
  std::vector<int> f(ell);
  const std::uint64_t flips = std::uint64_t{1} << (ell - 1);
  do {
    const int eps = inversion_sign(perm);
    std::int64_t e = 0;
    for (int i = 0; i < ell; ++i) {
      p[i] = ((a[i] * b[perm[i]]) % n + n) % n;
      f[i] = 1;
      e -= p[i];
    }
    e = ((e % n) + n) % n;
    counts[e] += eps;
    const int last = ell - 1;
    for (std::uint64_t t = 1; t < flips; ++t) {
      const int j = std::countr_zero(t);
      e += 2 * f[j] * p[j] + 2 * f[last] * p[last];
      f[j] = -f[j];
      f[last] = -f[last];
      e %= n;
      if (e < 0) e += n;
      counts[e] += eps;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

}  // namespace

int SignedPerm::perm_sign() const { return inversion_sign(perm); }

bool SignedPerm::valid() const {
  if (perm.size() != flips.size()) return false;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) return false;
  int neg = 0;
  for (int s : flips) {
    if (s != 1 && s != -1) return false;
    neg += s < 0;
  }
  return neg % 2 == 0;
}

std::vector<SignedPerm> weyl_group_D(int ell) {
  if (ell < 1) throw InvalidArgument("rank must be positive");
  std::vector<SignedPerm> out;
  std::vector<int> perm(ell);
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint64_t flips = std::uint64_t{1} << (ell - 1);
  do {
    std::vector<int> f(ell, 1);
    out.push_back({perm, f});
    for (std::uint64_t t = 1; t < flips; ++t) {
      const int j = std::countr_zero(t);
      f[j] = -f[j];
      f[ell - 1] = -f[ell - 1];
      out.push_back({perm, f});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CycNum weyl_sum(const Weight& lambda, const Weight& mu,
                const OracleOptions& opts) {
  check_pair(lambda, mu);
  const int ell = lambda.rank();
  if (ell > opts.max_ell)
    throw InvalidArgument("brute-force oracle disabled above l = " +
                          std::to_string(opts.max_ell));
  const std::uint32_t n = trig::conductor(ell);
  std::vector<std::int64_t> a(ell), b(ell);
  for (int i = 0; i < ell; ++i) {
    a[i] = lambda.entries[i].doubled;
    b[i] = mu.entries[i].doubled;
  }
  std::vector<std::vector<std::int64_t>> partial(
      ell, std::vector<std::int64_t>(n, 0));
  parallel_for(static_cast<std::size_t>(ell),
               [&](std::size_t head) {
                 accumulate_chunk(a, b, static_cast<int>(head), partial[head]);
               });
  std::vector<std::int64_t> counts(n, 0);
  for (const auto& chunk : partial)
    for (std::uint32_t k = 0; k < n; ++k) counts[k] += chunk[k];
  return CycNum::from_power_counts(n, counts);
}

bool det_shortcut_applicable(const Weight& lambda, const Weight& mu) {
  check_pair(lambda, mu);
  const std::int64_t e = 2 * static_cast<std::int64_t>(lambda.rank());
  auto has_zero = [](const Weight& w) {
    return std::any_of(w.entries.begin(), w.entries.end(),
                       [](HalfInt h) { return h.doubled == 0; });
  };
  if (has_zero(lambda) || has_zero(mu)) return true;
  auto integral = [](const Weight& w) {
    return std::all_of(w.entries.begin(), w.entries.end(),
                       [](HalfInt h) { return h.integral(); });
  };
  if (!integral(lambda) || !integral(mu)) return false;
  auto divisible = [e](const Weight& w) {
    return std::any_of(w.entries.begin(), w.entries.end(),
                       [e](HalfInt h) { return h.doubled % e == 0; });
  };
  return divisible(lambda) || divisible(mu);
}

CycMatrix r_matrix(const Weight& lambda, const Weight& mu) {
  check_pair(lambda, mu);
  const int ell = lambda.rank();
  CycMatrix r(ell, ell);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j)
      r(i, j) = trig::cos2_quarters(
          product_quarters(lambda.entries[i], mu.entries[j]), ell);
  return r;
}

CycNum det_shortcut(const Weight& lambda, const Weight& mu) {
  if (!det_shortcut_applicable(lambda, mu))
    throw NotApplicable("determinant shortcut does not apply to (" +
                        lambda.label() + ", " + mu.label() + ")");
  return det(r_matrix(lambda, mu)).scaled(Rational(1, 2));
}

CycMatrix kp_unnormalized(int ell, const OracleOptions& opts) {
  const auto ws = enumerate_weights(ell);
  const std::size_t n = ws.size();
  CycMatrix m(n, n);
  // Every entry is summed independently; symmetry is checked, not assumed.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = weyl_sum(ws[i], ws[j], opts);
  return m;
}

CycMatrix normalize_rows(const CycMatrix& kp) {
  CycMatrix s(kp.rows(), kp.cols());
  for (std::size_t i = 0; i < kp.rows(); ++i) {
    if (kp(i, 0).is_zero())
      throw InternalError("vanishing first-column entry in row " +
                          std::to_string(i));
    const CycNum inv = kp(i, 0).inv();
    for (std::size_t j = 0; j < kp.cols(); ++j) s(i, j) = kp(i, j) * inv;
  }
  return s;
}

CycMatrix smatrix_oracle(int ell, const OracleOptions& opts) {
  return normalize_rows(kp_unnormalized(ell, opts));
}

}  // namespace fusia::kp
