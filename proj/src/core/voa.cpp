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
#include "voa.hpp"

#include <algorithm>
#include <map>

namespace fusia::voa {

namespace {

using Kind = VOALabel::Kind;

void check_ell(int ell) {
  if (ell < 1) throw InvalidArgument("l must be at least 1");
}

bool is_zero(const VOALabel& a) { return a.kind == Kind::kBoundary && a.which == 0; }
bool is_top(const VOALabel& a, int ell) {
  return a.kind == Kind::kBoundary && a.which == ell;
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

// Appends [m] for an integer m, expanding a boundary marker into both signs.
void push_class(std::vector<VOALabel>& out, int m, int ell) {
  const int r = canonicalize(m, ell);
  if (r == 0 || r == ell) {
    out.push_back(VOALabel::boundary(r, 1));
    out.push_back(VOALabel::boundary(r, -1));
  } else {
    out.push_back(VOALabel::inner(r));
  }
}

// [from] + [from+2] + ... + [to]; empty when to < from.
void push_range(std::vector<VOALabel>& out, int from, int to, int ell) {
  for (int m = from; m <= to; m += 2) push_class(out, m, ell);
}

void push_both(std::vector<VOALabel>& out, Kind kind, int which) {
  out.push_back({kind, which, 1});
  out.push_back({kind, which, -1});
}

// Applies the rule whose left-hand side is literally (a, b); returns false
// if there is none.
bool apply(const VOALabel& a, const VOALabel& b, int ell, Product& p) {
  auto& t = p.terms;
  const int e = a.sign * b.sign;
  const bool even = ell % 2 == 0;
  if (a.kind == Kind::kInner && b.kind == Kind::kInner) {
    p.rule = "i x j";
    push_class(t, a.which + b.which, ell);
    push_class(t, a.which - b.which, ell);
    return true;
  }
  if (is_zero(a) && b.kind == Kind::kInner) {
    p.rule = "0 x i";
    push_class(t, b.which, ell);
    return true;
  }
  if (is_top(a, ell) && b.kind == Kind::kInner) {
    p.rule = "L x i";
    push_class(t, ell - b.which, ell);
    return true;
  }
  if (is_zero(a)) {
    p.rule = "0 x m";
    t.push_back({b.kind, b.which, e});
    return true;
  }
  if (a.kind == Kind::kTwist && b.kind == Kind::kInner) {
    p.rule = a.which == 1 ? "chi1 x i" : "chi2 x i";
    const bool flip = b.which % 2 == 1;
    push_both(t, Kind::kTwist, flip ? 3 - a.which : a.which);
    return true;
  }
  const std::string tag = even ? " (l even)" : " (l odd)";
  if (is_top(a, ell) && is_top(b, ell)) {
    p.rule = "L x L" + tag;
    t.push_back(VOALabel::boundary(0, even ? e : -e));
    return true;
  }
  if (is_top(a, ell) && b.kind == Kind::kTwist) {
    if (b.which == 1) {
      p.rule = "L x chi1" + tag;
      t.push_back(even ? VOALabel::twist(1, e) : VOALabel::twist(2, -e));
    } else {
      p.rule = "L x chi2" + tag;
      t.push_back(even ? VOALabel::twist(2, -e) : VOALabel::twist(1, e));
    }
    return true;
  }
  if (a.kind == Kind::kTwist && b.kind == Kind::kTwist && a.which <= b.which) {
    if (a.which == 1 && b.which == 1) {
      p.rule = "chi1 x chi1" + tag;
      if (even) {
        t.push_back(VOALabel::boundary(0, e));
        t.push_back(VOALabel::boundary(ell, e));
        push_range(t, 2, ell - 2, ell);
      } else {
        t.push_back(VOALabel::boundary(ell, e));
        push_range(t, 1, ell - 2, ell);
      }
    } else if (a.which == 1) {
      p.rule = "chi1 x chi2" + tag;
      if (even) {
        push_range(t, 1, ell - 1, ell);
      } else {
        t.push_back(VOALabel::boundary(0, e));
        push_range(t, 2, ell - 1, ell);
      }
    } else {
      p.rule = "chi2 x chi2" + tag;
      if (even) {
        t.push_back(VOALabel::boundary(0, e));
        t.push_back(VOALabel::boundary(ell, -e));
        push_range(t, 2, ell - 2, ell);
      } else {
        t.push_back(VOALabel::boundary(ell, -e));
        push_range(t, 1, ell - 2, ell);
      }
    }
    return true;
  }
  return false;
}

}  // namespace

bool VOALabel::valid(int ell) const {
  switch (kind) {
    case Kind::kInner:
      return which >= 1 && which <= ell - 1 && sign == 1;
    case Kind::kBoundary:
      return (which == 0 || which == ell) && (sign == 1 || sign == -1);
    case Kind::kTwist:
      return (which == 1 || which == 2) && (sign == 1 || sign == -1);
  }
  return false;
}

std::string VOALabel::to_string() const {
  switch (kind) {
    case Kind::kInner:
      return "i:" + std::to_string(which);
    case Kind::kBoundary:
      return (which == 0 ? "0" : "L") + sign_char(sign);
    case Kind::kTwist:
      return "chi" + std::to_string(which) + sign_char(sign);
  }
  return "?";
}

std::string VOALabel::short_name() const {
  return kind == Kind::kInner ? std::to_string(which) : to_string();
}

VOALabel parse_label(const std::string& text, int ell) {
  check_ell(ell);
  auto bad = [&]() {
    return InvalidArgument("unknown module label '" + text + "' for l = " +
                           std::to_string(ell));
  };
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 9)
      throw bad();
    return std::stoi(s);
  };
  if (text.empty()) throw bad();
  VOALabel out;
  const char last = text.back();
  if (text.rfind("i:", 0) == 0) {
    out = VOALabel::inner(parse_int(text.substr(2)));
  } else if (last == '+' || last == '-') {
    const int sign = last == '+' ? 1 : -1;
    const std::string head = text.substr(0, text.size() - 1);
    if (head == "chi1" || head == "chi2")
      out = VOALabel::twist(head[3] - '0', sign);
    else if (head == "L")
      out = VOALabel::boundary(ell, sign);
    else {
      const int v = parse_int(head);
      if (v != 0 && v != ell) throw bad();
      out = VOALabel::boundary(v, sign);
    }
  } else {
    out = VOALabel::inner(parse_int(text));
  }
  if (!out.valid(ell)) throw bad();
  return out;
}

int canonicalize(int m, int ell) {
  check_ell(ell);
  const int n = 2 * ell;
  int r = ((m % n) + n) % n;
  if (r > ell) r = n - r;
  return r;
}

std::vector<VOALabel> ordered_labels(int ell) {
  check_ell(ell);
  std::vector<VOALabel> out{VOALabel::boundary(0, 1), VOALabel::boundary(0, -1),
                            VOALabel::boundary(ell, 1), VOALabel::boundary(ell, -1)};
  for (int i = 1; i < ell; ++i) out.push_back(VOALabel::inner(i));
  out.push_back(VOALabel::twist(2, 1));
  out.push_back(VOALabel::twist(1, 1));
  out.push_back(VOALabel::twist(1, -1));
  out.push_back(VOALabel::twist(2, -1));
  return out;
}

int label_position(const VOALabel& a, int ell) {
  if (!a.valid(ell)) return -1;
  switch (a.kind) {
    case Kind::kBoundary:
      return (a.which == 0 ? 0 : 2) + (a.sign > 0 ? 0 : 1);
    case Kind::kInner:
      return 3 + a.which;
    case Kind::kTwist:
      if (a.which == 2) return a.sign > 0 ? ell + 3 : ell + 6;
      return a.sign > 0 ? ell + 4 : ell + 5;
  }
  return -1;
}

Product fuse(const VOALabel& a, const VOALabel& b, int ell) {
  check_ell(ell);
  if (!a.valid(ell) || !b.valid(ell))
    throw InvalidArgument("invalid module label for l = " + std::to_string(ell));
  Product p;
  if (apply(a, b, ell, p)) return p;
  p = Product{};
  if (apply(b, a, ell, p)) return p;
  throw InternalError("no fusion rule for " + a.to_string() + " x " + b.to_string());
}

std::vector<RuleInstance> rule_instances(int ell) {
  const auto labels = ordered_labels(ell);
  std::vector<RuleInstance> out;
  for (const auto& a : labels)
    for (const auto& b : labels) {
      Product p;
      if (apply(a, b, ell, p)) out.push_back({a, b, std::move(p)});
    }
  return out;
}

FusionAlgebra voa_algebra(int ell) {
  const auto labels = ordered_labels(ell);
  const int n = static_cast<int>(labels.size());
  std::vector<std::int64_t> t(static_cast<std::size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& term : fuse(labels[i], labels[j], ell).terms)
        ++t[(static_cast<std::size_t>(i) * n + j) * n + label_position(term, ell)];
  std::vector<std::string> names;
  for (const auto& l : labels) names.push_back(l.to_string());
  std::vector<int> dual;
  try {
    dual = dual_from_tensor(n, t);
  } catch (const NotFusionMatrix& e) {
    throw InternalError(std::string("fusion rules give no duality: ") + e.what());
  }
  FusionAlgebra f(std::move(names), std::move(t), std::move(dual));
  const auto rep = check_axioms(f);
  if (!rep.ok())
    throw InternalError("fusion rules violate the axioms at l = " + std::to_string(ell) +
                        ": " + rep.violations.front());
  return f;
}

std::string format_terms(const std::vector<VOALabel>& terms, int ell) {
  std::map<int, int> counts;
  for (const auto& t : terms) ++counts[label_position(t, ell)];
  if (counts.empty()) return "0";
  const auto labels = ordered_labels(ell);
  std::string s;
  for (const auto& [pos, m] : counts) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += labels[pos].short_name();
  }
  return s;
}

std::string format_product(const FusionAlgebra& f, int i, int j) {
  std::string s;
  for (const auto& [k, m] : f.product(i, j)) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    const auto& name = f.label(k);
    s += name.rfind("i:", 0) == 0 ? name.substr(2) : name;
  }
  return s.empty() ? "0" : s;
}

}  // namespace fusia::voa
