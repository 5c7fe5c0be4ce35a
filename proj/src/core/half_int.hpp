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

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fusia {

/// An exact element of (1/2)Z, stored doubled.
struct HalfInt {
  std::int64_t doubled = 0;

  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt{2 * v}; }
  static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt{d}; }

  constexpr bool integral() const { return doubled % 2 == 0; }
  mpq_class value() const {
    mpq_class q(doubled, 2);
    q.canonicalize();
    return q;
  }

  constexpr HalfInt operator-() const { return HalfInt{-doubled}; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return HalfInt{a.doubled + b.doubled};
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return HalfInt{a.doubled - b.doubled};
  }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  /// The product of two half-integers, in quarters.
  friend constexpr std::int64_t product_quarters(HalfInt a, HalfInt b) {
    return a.doubled * b.doubled;
  }

  std::string to_string() const {
    if (integral()) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
  }
};

}  // namespace fusia
