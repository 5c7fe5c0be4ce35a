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
#pragma once

// The per-l invariant suite run by `fusia verify`.

#include "json.hpp"

namespace fusia::verify {

struct Options {
  /// Also compare against the brute-force Weyl sums (l <= 7 only).
  bool oracle = false;
  /// Run the exact Verlinde recomputation up to this l.
  int verlinde_max_ell = 8;
};

/// {"ell", "pass", "checks": [{"name", "pass", "detail"}...], ...}.
/// l = 1, 2 run the small-case isomorphism search; l >= 3 the full suite.
/// The modular relation (ST)^3 = S^2 is reported under "modular_relation"
/// and does not affect "pass".
nlohmann::ordered_json run(int ell, const Options& opts = {});

}  // namespace fusia::verify
