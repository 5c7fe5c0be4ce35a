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
#include "weights.hpp"

#include "error.hpp"

namespace fusia {

WeightClass Weight::klass() const {
  return !entries.empty() && !entries.front().integral() ? WeightClass::kH
                                                         : WeightClass::kZ;
}

std::string Weight::label() const {
  switch (kind) {
    case WeightKind::kNu:
      return "nu_" + std::to_string(index);
    case WeightKind::kNuPrime0:
      return "nu'_0";
    case WeightKind::kNuPrimeL:
      return "nu'_" + std::to_string(rank());
    case WeightKind::kMu:
      return "mu_" + std::to_string(index);
  }
  return "?";
}

nlohmann::ordered_json Weight::to_json() const {
  nlohmann::ordered_json j;
  j["label"] = label();
  auto arr = nlohmann::ordered_json::array();
  for (auto e : entries) arr.push_back(e.doubled);
  j["entries_doubled"] = std::move(arr);
  return j;
}

namespace {

// {0, ..., l} with l - i removed.
Weight nu(int i, int ell) {
  Weight w;
  w.kind = WeightKind::kNu;
  w.index = i;
  for (int v = 0; v <= ell; ++v)
    if (v != ell - i) w.entries.push_back(HalfInt::from_int(v));
  return w;
}

// (1/2)(s, 3, 5, ..., 2l-3, t)
Weight mu(int j, int ell, int first, int last) {
  Weight w;
  w.kind = WeightKind::kMu;
  w.index = j;
  w.entries.push_back(HalfInt::from_doubled(first));
  for (int k = 2; k < ell; ++k) w.entries.push_back(HalfInt::from_doubled(2 * k - 1));
  w.entries.push_back(HalfInt::from_doubled(last));
  return w;
}

}  // namespace

std::vector<Weight> enumerate_weights(int ell) {
  if (ell < 3) throw InvalidArgument("the level-2 weight set requires l >= 3");
  std::vector<Weight> out;
  out.reserve(ell + 7);
  out.push_back(nu(0, ell));

  Weight p0 = nu(0, ell);
  p0.kind = WeightKind::kNuPrime0;
  p0.index = 0;
  p0.entries.back() = HalfInt::from_int(ell + 1);
  out.push_back(p0);

  Weight pl = nu(ell, ell);
  pl.kind = WeightKind::kNuPrimeL;
  pl.index = ell;
  pl.entries.front() = HalfInt::from_int(-1);
  out.push_back(pl);

  out.push_back(nu(ell, ell));
  for (int i = 1; i < ell; ++i) out.push_back(nu(i, ell));
  out.push_back(mu(0, ell, 1, 2 * ell - 1));
  out.push_back(mu(1, ell, -1, 2 * ell - 1));
  out.push_back(mu(2, ell, 1, 2 * ell + 1));
  out.push_back(mu(3, ell, -1, 2 * ell + 1));
  return out;
}

int weight_position(const std::string& label, int ell) {
  const auto ws = enumerate_weights(ell);
  for (std::size_t k = 0; k < ws.size(); ++k)
    if (ws[k].label() == label) return static_cast<int>(k);
  return -1;
}

std::int64_t bilinear_quarters(const Weight& a, const Weight& b) {
  if (a.entries.size() != b.entries.size())
    throw InvalidArgument("bilinear form of weights of different rank");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    s += product_quarters(a.entries[i], b.entries[i]);
  return s;
}

Rational bilinear(const Weight& a, const Weight& b) {
  Rational r(bilinear_quarters(a, b), 4);
  r.canonicalize();
  return r;
}

}  // namespace fusia
