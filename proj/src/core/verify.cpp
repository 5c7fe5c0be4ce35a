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
#include "verify.hpp"

#include <cmath>
#include <complex>

#include "closed_form.hpp"
#include "fusion.hpp"
#include "iso.hpp"
#include "kac_peterson.hpp"
#include "voa.hpp"
#include "weights.hpp"

namespace fusia::verify {

namespace {

using Complex = std::complex<double>;
using DMatrix = std::vector<std::vector<Complex>>;

DMatrix to_double(const CycMatrix& m) {
  DMatrix d(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j).to_complex();
  return d;
}

DMatrix mul(const DMatrix& a, const DMatrix& b) {
  const std::size_t n = a.size();
  DMatrix c(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

class Checks {
 public:
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["pass"] = pass;
    if (!detail.empty()) j["detail"] = detail;
    list_.push_back(std::move(j));
    all_ &= pass;
  }
  bool all() const { return all_; }
  nlohmann::ordered_json take() { return std::move(list_); }

 private:
  nlohmann::ordered_json list_ = nlohmann::ordered_json::array();
  bool all_ = true;
};

std::string first_or_empty(const std::vector<std::string>& v) {
  return v.empty() ? std::string() : v.front();
}

nlohmann::ordered_json run_small(int ell) {
  const auto rep = iso::verify_small(ell);
  Checks checks;
  checks.add("small_case_isomorphism", rep.pass, rep.detail);
  if (ell == 1) {
    const auto f = voa::voa_algebra(1);
    const int order = iso::element_order(f, voa::label_position(voa::VOALabel::twist(1, 1), 1));
    checks.add("chi1+_order_8", order == 8, "order " + std::to_string(order));
  }
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["pass"] = checks.all();
  j["checks"] = checks.take();
  j["isomorphism"] = rep.to_json();
  return j;
}

}  // namespace

nlohmann::ordered_json run(int ell, const Options& opts) {
  if (ell < 1) throw InvalidArgument("l must be at least 1");
  if (ell <= 2) return run_small(ell);

  Checks checks;
  nlohmann::ordered_json extra;
  const closed::Layout lay{ell};
  const int n = lay.size();
  CycMatrix s = closed::smatrix_closed(ell);
  const CycMatrix S = closed::S_matrix(ell);

  {
    bool zero = true;
    for (int i = 1; i < ell; ++i)
      for (int j = 0; j < 4; ++j)
        zero = zero && s(lay.nu(i), lay.mu(j)).is_zero() && s(lay.mu(j), lay.nu(i)).is_zero();
    checks.add("zero_pattern", zero);
  }

  checks.add("S_symmetric", S == S.transpose());
  checks.add("S_unitary", S.conj_transpose() * S == CycMatrix::identity(n));
  std::vector<int> charge;
  try {
    charge = involution_from_s(S);
    bool involutive = true;
    for (int i = 0; i < n; ++i) involutive = involutive && charge[charge[i]] == i;
    checks.add("S2_permutation_involution", involutive);
  } catch (const Error& e) {
    checks.add("S2_permutation_involution", false, e.what());
  }
  {
    const auto row = closed::s_first_row(ell);
    bool positive = true;
    for (int k = 0; k < n; ++k) {
      const auto z = S(0, k).to_complex();
      positive = positive && std::abs(z.imag()) < 1e-9 && z.real() > 1e-9 &&
                 S(k, 0) == row[k];
    }
    checks.add("first_row_positive", positive);
  }
  const auto T = closed::T_matrix(ell);
  {
    bool unit = true;
    for (const auto& t : T) unit = unit && std::abs(std::abs(t.to_complex()) - 1.0) < 1e-9;
    checks.add("T_unit_modulus", unit);
  }

  std::optional<FusionAlgebra> fa;
  try {
    fa = from_smatrix(s, closed::order_labels(ell));
    const auto ax = check_axioms(*fa);
    checks.add("fusion_integrality_axioms", ax.ok(), first_or_empty(ax.violations));
  } catch (const Error& e) {
    checks.add("fusion_integrality_axioms", false, e.what());
  }
  if (fa) {
    if (!charge.empty()) checks.add("charge_conjugation_is_dual", charge == fa->duals());
    if (ell % 2 == 0) {
      bool self = true;
      for (int i = 0; i < n; ++i) self = self && fa->dual(i) == i;
      checks.add("even_l_self_dual", self);
    }
    checks.add("conjugation_is_dual", iso::conjugation_is_dual(s, *fa));
    if (ell <= opts.verlinde_max_ell) {
      const auto v = verlinde_check(S, *fa);
      checks.add("verlinde", v.ok,
                 v.ok ? "" : std::to_string(v.mismatches.size()) + " mismatches");
    }
  }

  const auto rep = iso::verify_iso(ell, {s, std::nullopt});
  checks.add("isomorphism", rep.pass, first_or_empty(rep.failures));
  extra["isomorphism"] = rep.to_json();

  if (opts.oracle) {
    if (ell <= 7) {
      kp::OracleOptions oo;
      const auto ws = enumerate_weights(ell);
      CycMatrix kp = kp::kp_unnormalized(ell, oo);
      const bool matched = kp::normalize_rows(kp) == s;
      bool shortcut = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (kp::det_shortcut_applicable(ws[i], ws[j]))
            shortcut = shortcut && kp::det_shortcut(ws[i], ws[j]) == kp(i, j);
      checks.add("oracle_smatrix", matched);
      checks.add("oracle_det_shortcut", shortcut);
      extra["oracle_matched"] = matched && shortcut;
    } else {
      extra["oracle_matched"] = nullptr;
    }
  }

  {
    // Reported only.
    const DMatrix Sd = to_double(S);
    DMatrix ST = Sd;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ST[i][j] *= T[j].to_complex();
    const DMatrix lhs = mul(mul(ST, ST), ST), rhs = mul(Sd, Sd);
    double dev = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dev = std::max(dev, std::abs(lhs[i][j] - rhs[i][j]));
    // Up to a scalar: (S^2)_{00} = 1, so the scalar is lhs_{00}.
    const Complex scalar = lhs[0][0];
    double proj = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        proj = std::max(proj, std::abs(lhs[i][j] - scalar * rhs[i][j]));
    nlohmann::ordered_json m;
    m["max_deviation"] = dev;
    m["holds_numerically"] = dev < 1e-9;
    m["projective_max_deviation"] = proj;
    m["holds_up_to_scalar"] = proj < 1e-9;
    m["scalar"] = {scalar.real(), scalar.imag()};
    extra["modular_relation"] = std::move(m);
  }

  nlohmann::ordered_json out;
  out["ell"] = ell;
  out["pass"] = checks.all();
  out["checks"] = checks.take();
  for (auto& [k, v] : extra.items()) out[k] = v;
  return out;
}

}  // namespace fusia::verify
