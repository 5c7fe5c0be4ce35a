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
#include "closed_form.hpp"

#include <array>
#include <sstream>

#include "trig.hpp"
#include "weights.hpp"

namespace fusia::closed {

namespace {

void check_ell(int ell) {
  if (ell < 3) throw InvalidArgument("closed forms require l >= 3");
}

// i^l
CycNum i_pow(int ell) { return CycNum::root_of_unity(4, ell % 4); }

}  // namespace

int Layout::nu(int i) const {
  if (i == 0) return 0;
  if (i == ell) return 3;
  return 3 + i;
}

CycMatrix w_matrix(int ell) {
  check_ell(ell);
  CycMatrix w(4, 4);
  switch (ell % 4) {
    case 1:
    case 3: {
      // Indexed by {1,7,3,5}; for l = 1 (mod 4) the Weyl sum gives the
      // complex conjugate of the l = 3 block.
      const std::array<int, 4> e{1, 7, 3, 5};
      const int sign = ell % 4 == 1 ? -1 : 1;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          w(r, c) = CycNum::root_of_unity(8, sign * e[r] * e[c]);
      break;
    }
    case 2:
    case 0: {
      static constexpr int kTwo[4][4] = {
          {0, 1, -1, 0}, {1, 0, 0, -1}, {-1, 0, 0, 1}, {0, -1, 1, 0}};
      static constexpr int kZero[4][4] = {
          {1, 0, 0, -1}, {0, 1, -1, 0}, {0, -1, 1, 0}, {-1, 0, 0, 1}};
      const auto& pattern = ell % 4 == 2 ? kTwo : kZero;
      const CycNum root2 = sqrt_nat(2);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          if (pattern[r][c] != 0) w(r, c) = pattern[r][c] > 0 ? root2 : -root2;
      break;
    }
  }
  return w;
}

CycMatrix smatrix_with_block(int ell, const CycMatrix& w) {
  check_ell(ell);
  if (w.rows() != 4 || w.cols() != 4)
    throw InvalidArgument("half-integral block must be 4x4");
  const Layout lay{ell};
  const int n = lay.size();
  CycMatrix s(n, n);

  // Integral block: rows/columns nu'_0 and nu'_l repeat nu_0 and nu_l.
  std::vector<int> base(n, -1);
  for (int i = 0; i <= ell; ++i) base[lay.nu(i)] = i;
  base[lay.nu_prime0()] = 0;
  base[lay.nu_primeL()] = ell;
  for (int r = 0; r < ell + 3; ++r)
    for (int c = 0; c < ell + 3; ++c) {
      const int i = base[r], j = base[c];
      s(r, c) = trig::cos2_quarters(4LL * i * j, ell).scaled(trig::rho(j, ell));
    }

  const CycNum root_l = sqrt_nat(ell);
  const CycNum il = i_pow(ell);
  // Parity-dependent sign pattern on the nu'_l / nu_l bands.
  const int parity = ell % 2 == 0 ? 1 : -1;
  const std::array<int, 4> v{-1, 1, 1, -1};
  for (int j = 0; j < 4; ++j) {
    const int m = lay.mu(j);
    s(lay.nu(0), m) = root_l;
    s(lay.nu_prime0(), m) = -root_l;
    s(lay.nu_primeL(), m) = (il * root_l).scaled(Rational(parity * v[j]));
    s(lay.nu(ell), m) = (il * root_l).scaled(Rational(-parity * v[j]));
    s(m, lay.nu(0)) = CycNum(1L);
    s(m, lay.nu_prime0()) = CycNum(-1L);
    s(m, lay.nu_primeL()) = il.scaled(Rational(parity * v[j]));
    s(m, lay.nu(ell)) = il.scaled(Rational(-parity * v[j]));
    for (int k = 0; k < 4; ++k) s(m, lay.mu(k)) = w(j, k);
  }
  s.unify();
  return s;
}

CycMatrix smatrix_closed(int ell) { return smatrix_with_block(ell, w_matrix(ell)); }

std::vector<CycNum> s_first_row(int ell) {
  check_ell(ell);
  const Layout lay{ell};
  // 1 / (2 sqrt(2l)) = sqrt(2l) / (4l)
  const std::uint32_t n = trig::conductor(ell);
  const CycNum scale = sqrt_nat(2 * ell, n).scaled(Rational(1, 4 * ell));
  const CycNum root_l = sqrt_nat(ell, n);
  std::vector<CycNum> row(lay.size());
  for (int k = 0; k < 4; ++k) row[k] = scale;
  for (int i = 1; i < ell; ++i) row[lay.nu(i)] = scale.scaled(Rational(2));
  for (int j = 0; j < 4; ++j) row[lay.mu(j)] = scale * root_l;
  return row;
}

CycMatrix S_matrix(int ell) {
  const CycMatrix s = smatrix_closed(ell);
  const auto first = s_first_row(ell);
  CycMatrix S(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) S(i, j) = first[i] * s(i, j);
  S.unify();
  return S;
}

CycNum t_phase(int ell) {
  check_ell(ell);
  const std::int64_t l = ell;
  return CycNum::root_of_unity(static_cast<std::uint32_t>(24 * (l - 1)),
                               -l * (l + 1) * (2 * l + 1));
}

std::vector<CycNum> T_matrix(int ell) {
  const CycNum phase = t_phase(ell);
  std::vector<CycNum> diag;
  // zeta_{4l}^{(w|w)} = zeta_{16l}^{4(w|w)}
  for (const auto& w : enumerate_weights(ell))
    diag.push_back(phase * CycNum::root_of_unity(16u * static_cast<std::uint32_t>(ell),
                                                 bilinear_quarters(w, w)));
  return diag;
}

std::vector<std::string> order_labels(int ell) {
  std::vector<std::string> out;
  for (const auto& w : enumerate_weights(ell)) out.push_back(w.label());
  return out;
}

nlohmann::ordered_json matrix_json(int ell, const CycMatrix& m) {
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["order"] = order_labels(ell);
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_json());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

nlohmann::ordered_json diagonal_json(int ell, const std::vector<CycNum>& d) {
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["order"] = order_labels(ell);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : d) arr.push_back(x.to_json());
  j["diagonal"] = std::move(arr);
  return j;
}

nlohmann::ordered_json matrix_json_numeric(int ell, const CycMatrix& m, int digits) {
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["order"] = order_labels(ell);
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c).approx(digits).format(digits));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

nlohmann::ordered_json diagonal_json_numeric(int ell, const std::vector<CycNum>& d,
                                             int digits) {
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["order"] = order_labels(ell);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : d) arr.push_back(x.approx(digits).format(digits));
  j["diagonal"] = std::move(arr);
  return j;
}

std::string matrix_csv(int ell, const CycMatrix& m, int digits) {
  std::ostringstream os;
  const auto labels = order_labels(ell);
  os << "label";
  for (const auto& l : labels) os << "," << l;
  os << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << labels[r];
    for (std::size_t c = 0; c < m.cols(); ++c) os << "," << m(r, c).approx(digits).format(digits);
    os << "\n";
  }
  return os.str();
}

std::string diagonal_csv(int ell, const std::vector<CycNum>& d, int digits) {
  std::ostringstream os;
  const auto labels = order_labels(ell);
  os << "label,value\n";
  for (std::size_t k = 0; k < d.size(); ++k)
    os << labels[k] << "," << d[k].approx(digits).format(digits) << "\n";
  return os.str();
}

}  // namespace fusia::closed
