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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fusia/fusia.h"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// Owns a string returned by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { fusia_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int report_error(fusia_status st) {
  std::cerr << "fusia: " << fusia_last_error() << "\n";
  return st == FUSIA_E_INVALID_ARGUMENT ? kUsage : kVerifyFailed;
}

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) return std::nullopt;
      return std::make_pair(v, v);
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) return std::nullopt;
    const int hi = std::stoi(b, &used);
    if (used != b.size()) return std::nullopt;
    return std::make_pair(lo, hi);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_smatrix(int ell, const std::string& form, const std::string& format, int digits,
                bool exact) {
  LibString out;
  const fusia_status st =
      fusia_export(ell, form.c_str(), format.c_str(), exact ? 1 : 0, digits, &out.p);
  if (st != FUSIA_OK) return report_error(st);
  std::cout << out.str();
  return kOk;
}

int cmd_fusion(int ell, const std::string& side, const std::string& product, bool json) {
  fusia_algebra* alg = nullptr;
  const fusia_status st =
      side == "voa" ? fusia_algebra_voa(ell, &alg) : fusia_algebra_affine(ell, &alg);
  if (st != FUSIA_OK) return report_error(st);
  struct Free {
    fusia_algebra* a;
    ~Free() { fusia_algebra_free(a); }
  } guard{alg};

  LibString out;
  if (!product.empty()) {
    const auto comma = product.find(',');
    if (comma == std::string::npos) {
      std::cerr << "fusia: --product expects two labels separated by a comma\n";
      return kUsage;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(' '), e = s.find_last_not_of(' ');
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    int i = 0, j = 0;
    fusia_status s1 = fusia_algebra_index(alg, trim(product.substr(0, comma)).c_str(), &i);
    if (s1 != FUSIA_OK) return report_error(s1);
    s1 = fusia_algebra_index(alg, trim(product.substr(comma + 1)).c_str(), &j);
    if (s1 != FUSIA_OK) return report_error(s1);
    s1 = fusia_algebra_product(alg, i, j, &out.p);
    if (s1 != FUSIA_OK) return report_error(s1);
    std::cout << out.str() << "\n";
    return kOk;
  }
  const fusia_status s2 = json ? fusia_algebra_json(alg, &out.p) : fusia_algebra_table(alg, &out.p);
  if (s2 != FUSIA_OK) return report_error(s2);
  std::cout << out.str();
  if (json) std::cout << "\n";
  return kOk;
}

int cmd_verify(const std::string& range_text, bool oracle, const std::string& report_path) {
  std::pair<int, int> range = oracle ? std::make_pair(3, 6) : std::make_pair(3, 12);
  if (!range_text.empty()) {
    const auto r = parse_range(range_text);
    if (!r || r->first < 1 || r->first > r->second) {
      std::cerr << "fusia: range must look like a..b with 1 <= a <= b\n";
      return kUsage;
    }
    range = *r;
  }
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  bool all = true, oracle_all = true;
  for (int ell = range.first; ell <= range.second; ++ell) {
    int pass = 0;
    LibString out;
    const fusia_status st = fusia_verify(ell, oracle ? 1 : 0, &pass, &out.p);
    if (st != FUSIA_OK) return report_error(st);
    auto j = nlohmann::ordered_json::parse(out.str());
    std::cout << "l=" << ell << " " << (pass ? "PASS" : "FAIL");
    for (const auto& c : j["checks"])
      if (!c["pass"].get<bool>()) std::cout << " [" << c["name"].get<std::string>() << "]";
    std::cout << "\n";
    if (oracle && j.contains("oracle_matched") && j["oracle_matched"].is_boolean())
      oracle_all = oracle_all && j["oracle_matched"].get<bool>();
    all = all && pass;
    results.push_back(std::move(j));
  }
  if (!report_path.empty()) {
    nlohmann::ordered_json rep;
    rep["range"] = {range.first, range.second};
    rep["pass"] = all;
    if (oracle) rep["oracle_matched"] = oracle_all;
    rep["results"] = std::move(results);
    std::ofstream f(report_path);
    if (!f) {
      std::cerr << "fusia: cannot write " << report_path << "\n";
      return kUsage;
    }
    f << rep.dump(2) << "\n";
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular data and fusion rings of D_l^(1) at level 2 and of V_L^+"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fusia_version()));

  int ell = 0;
  std::string form = "s", format = "json", side = "voa", product, range, report;
  int digits = 10;
  bool exact = false, oracle = false, json = false;

  auto* sm = app.add_subcommand("smatrix", "Print the s-, S- or T-matrix");
  sm->add_option("ell", ell, "rank l (>= 3)")->required();
  sm->add_option("--form", form, "s, S or T")->check(CLI::IsMember({"s", "S", "T"}));
  sm->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sm->add_option("--digits", digits, "decimals for numeric output")->check(CLI::Range(1, 1000));
  sm->add_flag("--exact", exact, "exact cyclotomic JSON");

  auto* fu = app.add_subcommand("fusion", "Print a fusion table or a single product");
  fu->add_option("ell", ell, "rank l")->required();
  fu->add_option("--side", side, "voa or affine")->check(CLI::IsMember({"voa", "affine"}));
  fu->add_option("--product", product, "two labels, e.g. \"chi1+,chi1-\"");
  fu->add_flag("--json", json, "print the structure constants as JSON");

  auto* ve = app.add_subcommand("verify", "Run the invariant suite over a range of l");
  ve->add_option("range", range, "a..b (default 3..12, or 3..6 with --oracle)");
  ve->add_flag("--oracle", oracle, "also compare with brute-force Weyl sums (l <= 7)");
  ve->add_option("--report", report, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (sm->parsed()) return cmd_smatrix(ell, form, format, digits, exact);
  if (fu->parsed()) return cmd_fusion(ell, side, product, json);
  return cmd_verify(range, oracle, report);
}
