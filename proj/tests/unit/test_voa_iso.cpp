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
#include "doctest.h"

#include <algorithm>

#include "closed_form.hpp"
#include "iso.hpp"
#include "verify.hpp"
#include "voa.hpp"

using namespace fusia;
using voa::VOALabel;

namespace {

std::vector<std::string> names(const std::vector<VOALabel>& v) {
  std::vector<std::string> out;
  for (const auto& l : v) out.push_back(l.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("canonical representatives") {
  CHECK(voa::canonicalize(7, 4) == 1);
  CHECK(voa::canonicalize(-2, 5) == 2);
  CHECK(voa::canonicalize(4, 4) == 4);
  CHECK(voa::canonicalize(8, 4) == 0);
  CHECK(voa::canonicalize(5, 4) == 3);
}

TEST_CASE("labels") {
  for (int ell = 1; ell <= 9; ++ell) {
    const auto labels = voa::ordered_labels(ell);
    CHECK(labels.size() == static_cast<std::size_t>(ell + 7));
    for (std::size_t p = 0; p < labels.size(); ++p) {
      CHECK(voa::label_position(labels[p], ell) == static_cast<int>(p));
      CHECK(voa::parse_label(labels[p].to_string(), ell) == labels[p]);
    }
  }
  CHECK(voa::parse_label("3", 5) == VOALabel::inner(3));
  CHECK(voa::parse_label("5+", 5) == VOALabel::boundary(5, 1));
  CHECK(voa::parse_label("L-", 5) == VOALabel::boundary(5, -1));
  CHECK(voa::parse_label("chi2-", 5) == VOALabel::twist(2, -1));
  for (const char* bad : {"", "i:0", "i:5", "6", "chi3+", "2+", "x", "i:", "chi1"})
    CHECK_THROWS_AS(voa::parse_label(bad, 5), InvalidArgument);
}

TEST_CASE("individual products") {
  CHECK(names(voa::fuse(VOALabel::inner(1), VOALabel::inner(1), 4).terms) ==
        sorted({"i:2", "0+", "0-"}));
  CHECK(names(voa::fuse(VOALabel::twist(1, 1), VOALabel::twist(1, -1), 4).terms) ==
        sorted({"0-", "L-", "i:2"}));
  CHECK(names(voa::fuse(VOALabel::twist(1, 1), VOALabel::twist(1, 1), 3).terms) ==
        sorted({"L+", "i:1"}));
  CHECK(names(voa::fuse(VOALabel::twist(1, 1), VOALabel::twist(1, 1), 1).terms) ==
        std::vector<std::string>{"L+"});
  CHECK(names(voa::fuse(VOALabel::boundary(5, 1), VOALabel::twist(1, -1), 5).terms) ==
        std::vector<std::string>{"chi2+"});
  // Either argument order.
  const auto p = voa::fuse(VOALabel::inner(2), VOALabel::boundary(0, -1), 6);
  CHECK(names(p.terms) == std::vector<std::string>{"i:2"});
  CHECK(voa::format_terms(voa::fuse(VOALabel::twist(1, 1), VOALabel::twist(1, -1), 4).terms, 4) ==
        "0- + L- + 2");
  CHECK_THROWS_AS(voa::fuse(VOALabel::inner(4), VOALabel::inner(1), 4), InvalidArgument);
}

TEST_CASE("fusion rings of V_L^+ satisfy the axioms") {
  for (int ell = 1; ell <= 50; ++ell) {
    CAPTURE(ell);
    const auto f = voa::voa_algebra(ell);
    CHECK(f.size() == ell + 7);
    CHECK(check_axioms(f).ok());
    CHECK(f.label(0) == "0+");
    // Boundary labels: Z/2 x Z/2 for even l, Z/4 for odd l.
    const int order_l = iso::element_order(f, 2);
    CHECK(iso::element_order(f, 1) == 2);
    CHECK(order_l == (ell % 2 == 0 ? 2 : 4));
    // Twisted x inner flips chi1 <-> chi2 exactly for odd i.
    for (int i = 1; i < ell; ++i) {
      const auto t = voa::fuse(VOALabel::twist(1, 1), VOALabel::inner(i), ell).terms;
      CHECK(t.size() == 2);
      CHECK(t[0].which == (i % 2 ? 2 : 1));
    }
  }
  const auto f4 = voa::voa_algebra(4);
  for (int i = 0; i < f4.size(); ++i) CHECK(f4.dual(i) == i);
  const auto f5 = voa::voa_algebra(5);
  auto pos = [](const VOALabel& l) { return voa::label_position(l, 5); };
  CHECK(f5.dual(pos(VOALabel::boundary(5, 1))) == pos(VOALabel::boundary(5, -1)));
  CHECK(f5.dual(pos(VOALabel::twist(1, 1))) == pos(VOALabel::twist(2, 1)));
}

TEST_CASE("rule instances") {
  for (int ell = 1; ell <= 8; ++ell) {
    const auto inst = voa::rule_instances(ell);
    const auto f = voa::voa_algebra(ell);
    for (const auto& r : inst) {
      const int a = voa::label_position(r.a, ell), b = voa::label_position(r.b, ell);
      std::vector<std::int64_t> counts(f.size(), 0);
      for (const auto& t : r.product.terms) ++counts[voa::label_position(t, ell)];
      for (int k = 0; k < f.size(); ++k) CHECK(counts[k] == f.N(a, b, k));
    }
  }
}

TEST_CASE("canonical bijection") {
  const auto pairs = iso::canonical_pairs(3);
  CHECK(pairs[3 + 4 - 1].first.to_string() == "chi2+");
  CHECK(pairs[3 + 4 - 1].second.label() == "mu_0");
  CHECK(iso::canonical_pairs(7)[0].second.label() == "nu_0");
  for (const auto& [l, w] : iso::canonical_pairs(4))
    if (l == VOALabel::inner(2)) CHECK(w.label() == "nu_2");
  CHECK_THROWS_AS(iso::canonical_bijection(2), InvalidArgument);
}

TEST_CASE("isomorphism for l >= 3") {
  for (int ell = 3; ell <= 10; ++ell) {
    CAPTURE(ell);
    const auto rep = iso::verify_iso(ell);
    CHECK(rep.pass);
    CHECK(rep.tensor_match);
    CHECK(rep.columns_match);
    CHECK(rep.dual_match);
    CHECK(rep.checked_rules == voa::rule_instances(ell).size());
    const auto s = closed::smatrix_closed(ell);
    CHECK(iso::conjugation_is_dual(s, from_smatrix(s)));
  }
  const auto j = iso::verify_iso(3).to_json();
  CHECK(j["ell"] == 3);
  CHECK(j["pass"] == true);
  CHECK(j["failures"].empty());
}

TEST_CASE("isomorphism check rejects a wrong assignment") {
  auto perm = iso::canonical_bijection(4);
  std::swap(perm[4 + 3], perm[4 + 4]);  // chi2+ <-> chi1+
  iso::IsoOptions o;
  o.bijection = perm;
  const auto rep = iso::verify_iso(4, o);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("small cases") {
  const auto one = iso::verify_small(1);
  CHECK(one.pass);
  CHECK(one.generator == "chi1+");
  CHECK(iso::element_order(voa::voa_algebra(1), voa::label_position(VOALabel::twist(1, 1), 1)) == 8);
  CHECK(iso::verify_small(2).pass);
  CHECK_FALSE(iso::verify_small(1, group_ring(4)).pass);
  CHECK_FALSE(iso::verify_small(2, group_ring(9)).pass);
  CHECK_THROWS_AS(iso::verify_small(3), InvalidArgument);
}

TEST_CASE("verification suite") {
  for (int ell : {1, 2, 3, 4}) {
    const auto j = verify::run(ell);
    CHECK(j["pass"] == true);
  }
  verify::Options o;
  o.oracle = true;
  const auto j = verify::run(5, o);
  CHECK(j["pass"] == true);
  CHECK(j["oracle_matched"] == true);
  CHECK(j.contains("modular_relation"));
}
