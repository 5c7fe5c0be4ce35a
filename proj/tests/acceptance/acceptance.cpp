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
// Acceptance suite: one line per criterion, "[PASS] n ..." or "[FAIL] n ...".
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "closed_form.hpp"
#include "cyc_matrix.hpp"
#include "fusion.hpp"
#include "iso.hpp"
#include "kac_peterson.hpp"
#include "trig.hpp"
#include "voa.hpp"
#include "weights.hpp"

using namespace fusia;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& msg) {
    if (ok) detail = msg;
    ok = false;
  }
};

CycNum pow_nat(long base, int e) {
  CycNum r(1L);
  for (int i = 0; i < e; ++i) r = r * CycNum(base);
  return r;
}

Outcome cosine_identities() {
  Outcome o;
  for (int ell = 1; ell <= 30; ++ell)
    for (int m = 0; m <= 2 * ell; ++m) {
      const bool edge = m == 0 || m == 2 * ell;
      const CycNum rho = edge ? CycNum(2L * ell) : CycNum();
      const CycNum odd = m == 2 * ell ? CycNum(-2L * ell) : m == 0 ? CycNum(2L * ell) : CycNum();
      if (!(trig::lemcos_sum_rho(m, ell) == rho) || !(trig::lemcos_sum_odd(m, ell) == odd))
        o.fail("l=" + std::to_string(ell) + " m=" + std::to_string(m));
    }
  return o;
}

Outcome matrix_identities() {
  Outcome o;
  for (int ell = 1; ell <= 10; ++ell) {
    const std::string at = "l=" + std::to_string(ell) + ": ";
    const CycMatrix M = trig::matrix_M(ell), X = trig::matrix_X(ell);
    if (!(M * trig::matrix_N(ell) == CycMatrix::identity(ell + 1))) o.fail(at + "M N != I");
    if (!(X * X == CycMatrix::identity(ell).scaled(CycNum(2L * ell)))) o.fail(at + "X^2 != 2l I");
    const CycNum dm = det(M), dx = det(X), dw = det(trig::matrix_Omega(ell));
    if (!(dw * dw == CycNum(2L) * pow_nat(2L * ell, ell))) o.fail(at + "(det Omega)^2");
    if (!(dm * dm == CycNum(16L) * pow_nat(2L * ell, ell + 1))) o.fail(at + "(det M)^2");
    if (!(dx * sqrt_nat(2) == dw)) o.fail(at + "det X != det Omega / sqrt 2");
  }
  return o;
}

Outcome oracle_equivalence(int max_ell) {
  Outcome o;
  kp::OracleOptions opts;
  opts.max_ell = max_ell;
  for (int ell = 3; ell <= max_ell; ++ell)
    if (!(closed::smatrix_closed(ell) == kp::smatrix_oracle(ell, opts)))
      o.fail("l=" + std::to_string(ell));
  return o;
}

Outcome det_shortcut() {
  Outcome o;
  std::size_t applicable = 0;
  for (int ell = 3; ell <= 6; ++ell) {
    const auto w = enumerate_weights(ell);
    for (const auto& a : w)
      for (const auto& b : w) {
        if (!kp::det_shortcut_applicable(a, b)) continue;
        ++applicable;
        if (!(kp::det_shortcut(a, b) == kp::weyl_sum(a, b)))
          o.fail("l=" + std::to_string(ell) + " " + a.label() + "," + b.label());
      }
  }
  if (o.ok) o.detail = std::to_string(applicable) + " pairs";
  return o;
}

Outcome zero_pattern() {
  Outcome o;
  for (int ell = 3; ell <= 40; ++ell) {
    const CycMatrix s = closed::smatrix_closed(ell);
    for (int i = 1; i <= ell - 1; ++i)
      for (int j = 0; j < 4; ++j)
        if (!s(3 + i, ell + 3 + j).is_zero())
          o.fail("l=" + std::to_string(ell) + " nu_" + std::to_string(i));
  }
  return o;
}

Outcome modular_properties() {
  Outcome o;
  for (int ell = 3; ell <= 12; ++ell) {
    const std::string at = "l=" + std::to_string(ell) + ": ";
    const CycMatrix S = closed::S_matrix(ell);
    const std::size_t n = S.rows();
    if (!(S == S.transpose())) o.fail(at + "not symmetric");
    if (!(S.conj_transpose() * S == CycMatrix::identity(n))) o.fail(at + "not unitary");
    const CycMatrix S2 = S * S;
    bool perm = true;
    for (std::size_t i = 0; i < n; ++i) {
      int ones = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (S2(i, j) == CycNum(1L)) ++ones;
        else if (!S2(i, j).is_zero()) perm = false;
      }
      if (ones != 1) perm = false;
    }
    if (!perm) o.fail(at + "S^2 not a permutation");
    if (!(S2 * S2 == CycMatrix::identity(n))) o.fail(at + "S^4 != I");
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& z : {S(0, k).to_complex(), S(k, 0).to_complex()})
        if (!(z.real() > 1e-9) || std::abs(z.imag()) > 1e-9) o.fail(at + "first row sign");
  }
  return o;
}

Outcome fusion_integrality(int lo, int hi) {
  Outcome o;
  for (int ell = lo; ell <= hi; ++ell) {
    try {
      const auto f = from_smatrix(closed::smatrix_closed(ell));
      const auto rep = check_axioms(f);
      if (!rep.ok()) o.fail("l=" + std::to_string(ell) + ": " + rep.violations.front());
    } catch (const std::exception& e) {
      o.fail("l=" + std::to_string(ell) + ": " + e.what());
    }
  }
  return o;
}

Outcome verlinde() {
  Outcome o;
  for (int ell = 3; ell <= 8; ++ell) {
    const auto f = from_smatrix(closed::smatrix_closed(ell));
    if (!verlinde_check(closed::S_matrix(ell), f).ok) o.fail("l=" + std::to_string(ell));
  }
  return o;
}

// Expected affine dual: identity for even l; for odd l swaps nu_l <-> nu'_l,
// mu_0 <-> mu_1, mu_2 <-> mu_3.
bool affine_dual_pattern(int ell, const FusionAlgebra& f) {
  for (int i = 0; i < f.size(); ++i) {
    int expected = i;
    if (ell % 2 == 1) {
      const std::string l = f.label(i);
      const std::string L = std::to_string(ell);
      auto swap = [&](const std::string& a, const std::string& b) {
        if (l == a) expected = weight_position(b, ell);
        if (l == b) expected = weight_position(a, ell);
      };
      swap("nu_" + L, "nu'_" + L);
      swap("mu_0", "mu_1");
      swap("mu_2", "mu_3");
    }
    if (f.dual(i) != expected) return false;
  }
  return true;
}

Outcome isomorphism() {
  Outcome o;
  for (int ell = 3; ell <= 40; ++ell) {
    const auto rep = iso::verify_iso(ell);
    const std::string at = "l=" + std::to_string(ell) + ": ";
    if (!rep.tensor_match) o.fail(at + "tensor transport");
    if (!rep.columns_match) o.fail(at + "column products");
    if (!rep.dual_match) o.fail(at + "dual transport");
    if (!rep.pass) o.fail(at + (rep.failures.empty() ? "fail" : rep.failures.front()));
    std::vector<std::string> labels;
    for (const auto& w : enumerate_weights(ell)) labels.push_back(w.label());
    if (!affine_dual_pattern(ell, from_smatrix(closed::smatrix_closed(ell), labels)))
      o.fail(at + "dual pattern");
  }
  return o;
}

Outcome small_cases() {
  Outcome o;
  const auto one = iso::verify_small(1);
  if (!one.pass) o.fail("l=1: " + one.detail);
  const auto f1 = voa::voa_algebra(1);
  const int chi = voa::label_position(voa::VOALabel::twist(1, 1), 1);
  if (iso::element_order(f1, chi) != 8) o.fail("l=1: chi1+ order");
  const auto two = iso::verify_small(2, tensor_product(a1_level2(), a1_level2()));
  if (!two.pass) o.fail("l=2: " + two.detail);
  return o;
}

// A mutation is caught when the integrality axioms or the isomorphism fail.
bool caught(int ell, const CycMatrix& s) {
  try {
    const auto f = from_smatrix(s);
    if (!check_axioms(f).ok()) return true;
  } catch (const std::exception&) {
    return true;
  }
  iso::IsoOptions opts;
  opts.smatrix = s;
  return !iso::verify_iso(ell, opts).pass;
}

Outcome mutation_sensitivity() {
  Outcome o;
  int total = 0;
  for (int ell : {4, 5, 6, 7}) {
    const CycMatrix w = closed::w_matrix(ell);
    for (std::size_t r = 0; r < w.rows(); ++r)
      for (std::size_t c = 0; c < w.cols(); ++c) {
        if (w(r, c).is_zero()) continue;
        CycMatrix m = w;
        m(r, c) = -m(r, c);
        ++total;
        if (!caught(ell, closed::smatrix_with_block(ell, m)))
          o.fail("l=" + std::to_string(ell) + " W(" + std::to_string(r) + "," +
                 std::to_string(c) + ") not caught");
      }
  }
  if (o.ok) o.detail = std::to_string(total) + " mutations caught";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool with_l7 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--with-l7") == 0) with_l7 = true;

  struct Criterion {
    int id;
    std::string text;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "cosine identities, 1 <= l <= 30", cosine_identities},
      {2, "matrix identities, l <= 10", matrix_identities},
      {3, std::string("closed form = Weyl-sum oracle, l = 3..") + (with_l7 ? "7" : "6"),
       [&] { return oracle_equivalence(with_l7 ? 7 : 6); }},
      {4, "determinant shortcut = Weyl sum, l = 3..6", det_shortcut},
      {5, "zero pattern nu_i x H, l <= 40", zero_pattern},
      {6, "modular data properties, l = 3..12", modular_properties},
      {7, "fusion integrality and axioms, l = 3..40", [] { return fusion_integrality(3, 40); }},
      {8, "Verlinde recomputation, l = 3..8", verlinde},
      {9, "isomorphism with V_L^+ fusion ring, l = 3..40", isomorphism},
      {10, "small cases l = 1, 2", small_cases},
      {11, "single sign flips in W caught, l = 4..7", mutation_sensitivity},
  };

  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.text;
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    line.precision(2);
    line << std::fixed << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
