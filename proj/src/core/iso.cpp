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
#include "iso.hpp"

#include <functional>

#include "closed_form.hpp"
#include "parallel.hpp"

namespace fusia::iso {

namespace {

using voa::VOALabel;

std::string weight_label_for(const VOALabel& a, int ell) {
  switch (a.kind) {
    case VOALabel::Kind::kInner:
      return "nu_" + std::to_string(a.which);
    case VOALabel::Kind::kBoundary:
      if (a.which == 0) return a.sign > 0 ? "nu_0" : "nu'_0";
      return a.sign > 0 ? "nu'_" + std::to_string(ell) : "nu_" + std::to_string(ell);
    case VOALabel::Kind::kTwist:
      if (a.which == 2) return a.sign > 0 ? "mu_0" : "mu_3";
      return a.sign > 0 ? "mu_1" : "mu_2";
  }
  return {};
}

}  // namespace

std::vector<int> canonical_bijection(int ell) {
  if (ell < 3) throw InvalidArgument("canonical bijection requires l >= 3");
  std::vector<int> out;
  for (const auto& a : voa::ordered_labels(ell)) {
    const int p = weight_position(weight_label_for(a, ell), ell);
    if (p < 0) throw InternalError("no weight for module " + a.to_string());
    out.push_back(p);
  }
  return out;
}

std::vector<std::pair<VOALabel, Weight>> canonical_pairs(int ell) {
  const auto ws = enumerate_weights(ell);
  const auto perm = canonical_bijection(ell);
  const auto labels = voa::ordered_labels(ell);
  std::vector<std::pair<VOALabel, Weight>> out;
  for (std::size_t p = 0; p < labels.size(); ++p) out.emplace_back(labels[p], ws[perm[p]]);
  return out;
}

nlohmann::ordered_json IsoReport::to_json() const {
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["pass"] = pass;
  j["checked_rules"] = checked_rules;
  j["tensor_match"] = tensor_match;
  j["columns_match"] = columns_match;
  j["dual_match"] = dual_match;
  j["failures"] = failures;
  return j;
}

IsoReport verify_iso(int ell, const IsoOptions& opts) {
  IsoReport rep;
  rep.ell = ell;
  CycMatrix s = opts.smatrix ? *opts.smatrix : closed::smatrix_closed(ell);
  s.unify();
  const auto perm = opts.bijection ? *opts.bijection : canonical_bijection(ell);
  const int n = static_cast<int>(perm.size());
  if (static_cast<int>(s.rows()) != n) throw InvalidArgument("s-matrix has the wrong size");
  const auto labels = voa::ordered_labels(ell);
  const FusionAlgebra fv = voa::voa_algebra(ell);
  auto note = [&](std::string msg) {
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };

  // (a) structure constants transported through the bijection.
  std::optional<FusionAlgebra> fa;
  try {
    fa = from_smatrix(s, closed::order_labels(ell));
  } catch (const NotFusionMatrix& e) {
    note(std::string("affine side: ") + e.what());
  }
  if (fa) {
    rep.tensor_match = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool same = true;
        for (int k = 0; k < n && same; ++k)
          same = fv.N(i, j, k) == fa->N(perm[i], perm[j], perm[k]);
        if (!same) {
          rep.tensor_match = false;
          note("tensor: " + fv.label(i) + " x " + fv.label(j) + " = " +
               voa::format_product(fv, i, j) + " but " + fa->label(perm[i]) + " x " +
               fa->label(perm[j]) + " = " + fa->product_string(perm[i], perm[j]));
        }
      }
    rep.dual_match = true;
    for (int i = 0; i < n; ++i)
      if (perm[fv.dual(i)] != fa->dual(perm[i])) {
        rep.dual_match = false;
        note("dual: " + fv.label(i) + "* = " + fv.label(fv.dual(i)) + " but " +
             fa->label(perm[i]) + "* = " + fa->label(fa->dual(perm[i])));
      }
  }

  // (b) each rule instance on the s-columns.
  const auto instances = voa::rule_instances(ell);
  rep.checked_rules = instances.size();
  std::vector<char> ok(instances.size(), 1);
  parallel_for(instances.size(), [&](std::size_t idx) {
    const auto& r = instances[idx];
    const int a = perm[voa::label_position(r.a, ell)];
    const int b = perm[voa::label_position(r.b, ell)];
    for (int row = 0; row < n && ok[idx]; ++row) {
      CycNum rhs;
      for (const auto& t : r.product.terms) rhs += s(row, perm[voa::label_position(t, ell)]);
      ok[idx] = s(row, a) * s(row, b) == rhs;
    }
  });
  rep.columns_match = true;
  for (std::size_t idx = 0; idx < instances.size(); ++idx)
    if (!ok[idx]) {
      rep.columns_match = false;
      const auto& r = instances[idx];
      note("columns: rule '" + r.product.rule + "' " + r.a.to_string() + " x " +
           r.b.to_string() + " = " + voa::format_terms(r.product.terms, ell) +
           " fails on the s-matrix columns");
    }

  rep.pass = rep.tensor_match && rep.columns_match && rep.dual_match;
  return rep;
}

bool conjugation_is_dual(const CycMatrix& s, const FusionAlgebra& f) {
  const int n = f.size();
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      if (!(s(r, i).conj() == s(r, f.dual(i)))) return false;
  return true;
}

bool is_isomorphism(const FusionAlgebra& f, const FusionAlgebra& g,
                    const std::vector<int>& perm) {
  const int n = f.size();
  if (g.size() != n || static_cast<int>(perm.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (f.N(i, j, k) != g.N(perm[i], perm[j], perm[k])) return false;
  return true;
}

int element_order(const FusionAlgebra& f, int i) {
  auto single = [&](int a, int b) {
    const auto p = f.product(a, b);
    return p.size() == 1 && p[0].second == 1 ? p[0].first : -1;
  };
  if (single(i, f.dual(i)) != 0) return 0;
  int cur = i, order = 1;
  while (cur != 0) {
    cur = single(cur, i);
    if (cur < 0) return 0;
    ++order;
  }
  return order;
}

nlohmann::ordered_json SmallReport::to_json() const {
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["pass"] = pass;
  auto m = nlohmann::ordered_json::array();
  for (const auto& [a, b] : mapping) m.push_back({a, b});
  j["mapping"] = std::move(m);
  if (!generator.empty()) j["generator"] = generator;
  j["detail"] = detail;
  return j;
}

SmallReport verify_small(int ell, const std::optional<FusionAlgebra>& target) {
  if (ell != 1 && ell != 2) throw InvalidArgument("small-case check covers l = 1, 2");
  SmallReport rep;
  rep.ell = ell;
  const FusionAlgebra f = voa::voa_algebra(ell);
  const FusionAlgebra g =
      target ? *target
             : (ell == 1 ? group_ring(8) : tensor_product(a1_level2(), a1_level2()));
  const int n = f.size();
  auto record = [&](const std::vector<int>& perm) {
    rep.pass = true;
    for (int i = 0; i < n; ++i) rep.mapping.emplace_back(f.label(i), g.label(perm[i]));
  };
  if (g.size() != n) {
    rep.detail = "basis sizes differ: " + std::to_string(n) + " vs " + std::to_string(g.size());
    return rep;
  }

  if (ell == 1) {
    // g is expected cyclic with generator at index 1 (group_ring order).
    if (element_order(g, 1) != n) {
      rep.detail = "target is not cyclic on g1";
      return rep;
    }
    // [chi1]+ first, then the rest in order.
    std::vector<int> candidates{voa::label_position(VOALabel::twist(1, 1), 1)};
    for (int x = 0; x < n; ++x)
      if (x != candidates[0]) candidates.push_back(x);
    for (int x : candidates) {
      if (element_order(f, x) != n) continue;
      // x^k -> g1^k
      std::vector<int> perm(n, -1);
      int cur = 0, tgt = 0;
      for (int k = 0; k < n; ++k) {
        perm[cur] = tgt;
        cur = f.product(cur, x)[0].first;
        tgt = g.product(tgt, 1)[0].first;
      }
      if (is_isomorphism(f, g, perm)) {
        record(perm);
        rep.generator = f.label(x);
        rep.detail = f.label(x) + " has order " + std::to_string(n);
        return rep;
      }
    }
    rep.detail = "no element of order " + std::to_string(n) + " generates an isomorphism";
    return rep;
  }

  // l = 2: backtracking over unit- and dual-preserving bijections.
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  perm[0] = 0;
  used[0] = 1;
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == n) return is_isomorphism(f, g, perm);
    for (int c = 1; c < n; ++c) {
      if (used[c]) continue;
      perm[i] = c;
      bool fits = true;
      // Constants among already assigned elements, including self-products.
      for (int a = 0; a <= i && fits; ++a)
        for (int k = 0; k <= i && fits; ++k)
          fits = f.N(a, i, k) == g.N(perm[a], c, perm[k]) &&
                 f.N(i, i, k) == g.N(c, c, perm[k]);
      if (fits && f.dual(i) <= i) fits = perm[f.dual(i)] == g.dual(c);
      if (fits) {
        used[c] = 1;
        if (extend(i + 1)) return true;
        used[c] = 0;
      }
      perm[i] = -1;
    }
    return false;
  };
  if (extend(1)) {
    record(perm);
    rep.detail = "isomorphism found";
  } else {
    rep.detail = "no unit- and dual-preserving isomorphism";
  }
  return rep;
}

}  // namespace fusia::iso
