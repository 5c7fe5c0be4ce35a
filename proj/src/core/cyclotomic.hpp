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

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

#include "json.hpp"

#include "error.hpp"

namespace fusia {

using Rational = mpq_class;
using BigInt = mpz_class;
using BigFloat = boost::multiprecision::mpfr_float;

/// Data shared by every element of Q(zeta_N): the conductor, the degree
/// phi(N) and the coefficients of the cyclotomic polynomial Phi_N.
struct CyclotomicField {
  std::uint32_t conductor = 1;
  std::uint32_t degree = 1;
  /// Dense coefficients of Phi_N, lowest degree first (length degree + 1).
  std::vector<std::int64_t> phi;
  /// Nonzero (index, coefficient) pairs of Phi_N below the leading term.
  std::vector<std::pair<std::uint32_t, std::int64_t>> phi_tail;

  /// Cached field for conductor n; thread safe.
  static std::shared_ptr<const CyclotomicField> get(std::uint32_t n);
};

/// Coefficients of Phi_n, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint32_t euler_phi(std::uint32_t n);

/// High-precision complex value used for numeric export only.
struct ComplexApprox {
  BigFloat re;
  BigFloat im;
  std::string format(int digits) const;
};

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// The value is stored on the power basis 1, zeta_N, ..., zeta_N^(phi(N)-1)
/// after reduction modulo Phi_N, so two values at the same conductor are
/// equal exactly when their coefficient vectors are. Binary operations
/// first embed both operands into Q(zeta_lcm).
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycNum(const Rational& value);

  /// zeta_N^k in canonical form.
  static CycNum root_of_unity(std::uint32_t n, std::int64_t k);
  /// Builds a value from raw coefficients on the powers of zeta_N (any
  /// length, reduced mod x^N - 1 and Phi_N).
  static CycNum from_powers(std::uint32_t n, std::span<const Rational> powers);
  /// Builds sum_k counts[k] * zeta_N^k where counts has length N.
  static CycNum from_power_counts(std::uint32_t n,
                                  std::span<const std::int64_t> counts);

  std::uint32_t conductor() const { return field_->conductor; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// The same value in Q(zeta_n); n must be a multiple of conductor().
  CycNum embed(std::uint32_t n) const;

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  /// Exact integer extraction: succeeds only for rational integers.
  std::optional<BigInt> as_integer() const;

  CycNum conj() const;
  /// Multiplicative inverse via the extended Euclidean algorithm over Q[x].
  /// Throws DivisionByZero for zero.
  CycNum inv() const;

  std::complex<double> to_complex() const;
  /// Approximation with absolute error below 10^-digits.
  ComplexApprox approx(int digits) const;

  nlohmann::ordered_json to_json() const;
  static CycNum from_json(const nlohmann::ordered_json& j);
  std::string to_string() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// a += k * b for an integer k; the hot path of column sums.
  void add_scaled(const CycNum& b, long k);
  /// Multiplies by a rational scalar.
  CycNum scaled(const Rational& r) const;

 private:
  CycNum(std::shared_ptr<const CyclotomicField> field,
         std::vector<Rational> coeffs);
  static void reduce(const CyclotomicField& f, std::vector<Rational>& buf);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

/// The positive square root of n, built from quadratic Gauss sums and
/// embedded at lcm(hint, natural conductor).
CycNum sqrt_nat(std::uint64_t n, std::uint32_t hint = 1);

/// i = zeta_4.
inline CycNum imag_unit() { return CycNum::root_of_unity(4, 1); }

}  // namespace fusia
