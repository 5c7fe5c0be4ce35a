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
#include "cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include <mpfr.h>

namespace fusia {

namespace {

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<std::uint32_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

using Poly = std::vector<std::int64_t>;

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw InternalError("cyclotomic polynomial coefficient overflow");
  return static_cast<std::int64_t>(v);
}

// p * (x^d - 1)
Poly mul_binomial(const Poly& p, std::uint32_t d) {
  Poly out(p.size() + d, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] = checked(static_cast<__int128>(out[i + d]) + p[i]);
    out[i] = checked(static_cast<__int128>(out[i]) - p[i]);
  }
  return out;
}

// p / (x^d - 1), exact.
Poly div_binomial(const Poly& p, std::uint32_t d) {
  if (p.size() <= d) throw InternalError("inexact binomial division");
  Poly q(p.size() - d, 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    __int128 prev = i >= d ? q[i - d] : 0;
    q[i] = checked(prev - p[i]);
  }
  return q;
}

struct FieldCache {
  std::mutex mu;
  std::map<std::uint32_t, std::shared_ptr<const CyclotomicField>> fields;
};

FieldCache& field_cache() {
  static FieldCache cache;
  return cache;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

int legendre(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// Positive square root of an odd prime from the quadratic Gauss sum.
CycNum sqrt_prime(std::uint32_t p) {
  if (p == 2) return CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, 7);
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint32_t a = 1; a < p; ++a) counts[a] = legendre(a, p);
  CycNum g = CycNum::from_power_counts(p, counts);
  // g^2 = (-1/p) p, so g is sqrt(p) or i sqrt(p) up to sign.
  if (p % 4 == 3) g = -(imag_unit() * g);
  if (g.to_complex().real() < 0) g = -g;
  return g;
}

}  // namespace

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint64_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return static_cast<std::uint32_t>(r);
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("conductor must be positive");
  if (n == 1) return {-1, 1};
  const auto primes = prime_factors(n);
  std::uint32_t rad = 1;
  for (auto p : primes) rad *= p;
  // Phi_rad = prod_{d | rad} (x^d - 1)^mu(rad/d); numerator factors first so
  // every division is exact.
  const std::size_t r = primes.size();
  Poly poly{1};
  for (int pass = 0; pass < 2; ++pass) {
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      std::uint32_t d = 1;
      int omitted = 0;
      for (std::size_t b = 0; b < r; ++b) {
        if (mask & (1u << b))
          d *= primes[b];
        else
          ++omitted;
      }
      const bool numerator = omitted % 2 == 0;
      if (pass == 0 && numerator) poly = mul_binomial(poly, d);
      if (pass == 1 && !numerator) poly = div_binomial(poly, d);
    }
  }
  const std::uint32_t stretch = n / rad;
  if (stretch == 1) return poly;
  Poly out((poly.size() - 1) * stretch + 1, 0);
  for (std::size_t i = 0; i < poly.size(); ++i) out[i * stretch] = poly[i];
  return out;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("conductor must be positive");
  auto& cache = field_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.fields.find(n);
    if (it != cache.fields.end()) return it->second;
  }
  auto f = std::make_shared<CyclotomicField>();
  f->conductor = n;
  f->phi = cyclotomic_polynomial(n);
  f->degree = static_cast<std::uint32_t>(f->phi.size() - 1);
  for (std::uint32_t i = 0; i < f->degree; ++i)
    if (f->phi[i] != 0) f->phi_tail.emplace_back(i, f->phi[i]);
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.fields.emplace(n, std::move(f));
  return it->second;
}

// ---------------------------------------------------------------------------

CycNum::CycNum() : CycNum(CyclotomicField::get(1), {Rational(0)}) {}

CycNum::CycNum(long value) : CycNum(CyclotomicField::get(1), {Rational(value)}) {}

CycNum::CycNum(const Rational& value)
    : CycNum(CyclotomicField::get(1), {value}) {
  coeffs_[0].canonicalize();
}

CycNum::CycNum(std::shared_ptr<const CyclotomicField> field,
               std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

void CycNum::reduce(const CyclotomicField& f, std::vector<Rational>& buf) {
  Rational t;
  for (std::size_t k = buf.size(); k-- > f.degree;) {
    if (sgn(buf[k]) == 0) continue;
    const std::size_t base = k - f.degree;
    for (auto [idx, c] : f.phi_tail) {
      mpz_class cz(static_cast<long>(c));
      t = buf[k] * cz;
      buf[base + idx] -= t;
    }
    buf[k] = 0;
  }
  buf.resize(f.degree);
}

CycNum CycNum::root_of_unity(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw InvalidArgument("root of unity order must be positive");
  std::int64_t e = k % static_cast<std::int64_t>(n);
  if (e < 0) e += n;
  auto f = CyclotomicField::get(n);
  std::vector<Rational> buf(std::max<std::size_t>(f->degree, e + 1));
  buf[e] = 1;
  reduce(*f, buf);
  return CycNum(std::move(f), std::move(buf));
}

CycNum CycNum::from_powers(std::uint32_t n, std::span<const Rational> powers) {
  auto f = CyclotomicField::get(n);
  std::vector<Rational> buf(std::max<std::size_t>(n, f->degree));
  Rational p;
  for (std::size_t k = 0; k < powers.size(); ++k) {
    p = powers[k];
    p.canonicalize();
    buf[k % n] += p;
  }
  reduce(*f, buf);
  return CycNum(std::move(f), std::move(buf));
}

CycNum CycNum::from_power_counts(std::uint32_t n,
                                 std::span<const std::int64_t> counts) {
  auto f = CyclotomicField::get(n);
  std::vector<Rational> buf(std::max<std::size_t>(n, f->degree));
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) buf[k % n] += Rational(static_cast<long>(counts[k]));
  reduce(*f, buf);
  return CycNum(std::move(f), std::move(buf));
}

CycNum CycNum::embed(std::uint32_t n) const {
  if (n == conductor()) return *this;
  if (n % conductor() != 0)
    throw InvalidArgument("embedding target " + std::to_string(n) +
                          " is not a multiple of " +
                          std::to_string(conductor()));
  auto f = CyclotomicField::get(n);
  const std::uint32_t step = n / conductor();
  std::vector<Rational> buf(std::max<std::size_t>(n, f->degree));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) buf[(k * step) % n] = coeffs_[k];
  reduce(*f, buf);
  return CycNum(std::move(f), std::move(buf));
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

std::optional<Rational> CycNum::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return std::nullopt;
  return coeffs_[0];
}

std::optional<BigInt> CycNum::as_integer() const {
  auto r = as_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return r->get_num();
}

CycNum CycNum::conj() const {
  const std::uint32_t n = conductor();
  if (n <= 2) return *this;
  std::vector<Rational> buf(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) buf[(n - k) % n] = coeffs_[k];
  reduce(*field_, buf);
  return CycNum(field_, std::move(buf));
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.conductor() == conductor()) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  const auto n = static_cast<std::uint32_t>(lcm_u64(conductor(), o.conductor()));
  *this = embed(n);
  const CycNum b = o.embed(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (o.conductor() == conductor()) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  return *this += -o;
}

void CycNum::add_scaled(const CycNum& b, long k) {
  if (k == 0) return;
  if (b.conductor() != conductor()) {
    *this += b.scaled(Rational(k));
    return;
  }
  mpz_class kz(k);
  Rational t;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(b.coeffs_[i]) == 0) continue;
    t = b.coeffs_[i] * kz;
    coeffs_[i] += t;
  }
}

CycNum CycNum::scaled(const Rational& r) const {
  CycNum out = *this;
  Rational f = r;
  f.canonicalize();
  for (auto& c : out.coeffs_) c *= f;
  return out;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  const auto n =
      static_cast<std::uint32_t>(lcm_u64(a.conductor(), b.conductor()));
  auto f = a.conductor() == n ? a.field_
           : b.conductor() == n ? b.field_
                                : CyclotomicField::get(n);
  if (auto ra = a.as_rational()) {
    CycNum out = b.embed(n);
    if (*ra != 1)
      for (auto& c : out.coeffs_) c *= *ra;
    return out;
  }
  if (auto rb = b.as_rational()) {
    CycNum out = a.embed(n);
    if (*rb != 1)
      for (auto& c : out.coeffs_) c *= *rb;
    return out;
  }
  const std::uint32_t sa = n / a.conductor();
  const std::uint32_t sb = n / b.conductor();
  std::vector<std::uint32_t> ia, ib;
  for (std::uint32_t k = 0; k < a.coeffs_.size(); ++k)
    if (sgn(a.coeffs_[k]) != 0) ia.push_back(k);
  for (std::uint32_t k = 0; k < b.coeffs_.size(); ++k)
    if (sgn(b.coeffs_[k]) != 0) ib.push_back(k);
  std::vector<Rational> buf(std::max<std::size_t>(n, f->degree));
  Rational t;
  for (auto i : ia) {
    const std::uint64_t ei = static_cast<std::uint64_t>(i) * sa;
    for (auto j : ib) {
      const std::uint64_t e = (ei + static_cast<std::uint64_t>(j) * sb) % n;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      buf[e] += t;
    }
  }
  CycNum::reduce(*f, buf);
  return CycNum(std::move(f), std::move(buf));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum CycNum::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" +
                                      std::to_string(conductor()) + ")");
  if (auto r = as_rational()) {
    CycNum out = *this;
    out.coeffs_[0] = 1 / *r;
    return out;
  }
  using QPoly = std::vector<Rational>;
  auto trim = [](QPoly& p) {
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
  };
  // Invariant: s_k * a == r_k (mod Phi_N).
  QPoly r0(field_->phi.begin(), field_->phi.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0{Rational(0)}, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly rem = r0;
    QPoly q(r0.size() - r1.size() + 1);
    const Rational lead = r1.back();
    for (std::size_t k = rem.size(); k-- >= r1.size();) {
      if (sgn(rem[k]) == 0) continue;
      Rational c = rem[k] / lead;
      const std::size_t shift = k - (r1.size() - 1);
      q[shift] = c;
      for (std::size_t t = 0; t < r1.size(); ++t) rem[shift + t] -= c * r1[t];
    }
    rem.resize(r1.size() - 1);
    trim(rem);
    QPoly s2(std::max(s0.size(), q.size() + s1.size() - 1));
    for (std::size_t k = 0; k < s0.size(); ++k) s2[k] = s0[k];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (sgn(q[i]) == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (sgn(r1[0]) == 0) throw InternalError("non-invertible cyclotomic element");
  const Rational scale = 1 / r1[0];
  std::vector<Rational> buf(std::max<std::size_t>(s1.size(), field_->degree));
  for (std::size_t k = 0; k < s1.size(); ++k) buf[k] = s1[k] * scale;
  reduce(*field_, buf);
  return CycNum(field_, std::move(buf));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this / o; }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
  const auto n =
      static_cast<std::uint32_t>(lcm_u64(a.conductor(), b.conductor()));
  return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

std::complex<double> CycNum::to_complex() const {
  const double n = conductor();
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    z += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

ComplexApprox CycNum::approx(int digits) const {
  if (digits < 1) throw InvalidArgument("digits must be at least 1");
  // Coefficient magnitudes and the number of terms bound the cancellation.
  long magnitude = 0;
  for (const auto& c : coeffs_)
    if (sgn(c) != 0)
      magnitude = std::max<long>(
          magnitude, static_cast<long>(mpz_sizeinbase(c.get_num_mpz_t(), 2)));
  const unsigned digits10 = static_cast<unsigned>(
      digits + 10 + magnitude * 0.30103 + std::log10(coeffs_.size() + 1.0));
  const unsigned bits = static_cast<unsigned>(digits10 * 3.33) + 16;

  mpfr_t re, im, angle, cs, sn, q, pi;
  for (auto* v : {&re, &im, &angle, &cs, &sn, &q, &pi}) mpfr_init2(*v, bits);
  mpfr_set_ui(re, 0, MPFR_RNDN);
  mpfr_set_ui(im, 0, MPFR_RNDN);
  mpfr_const_pi(pi, MPFR_RNDN);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    mpfr_mul_ui(angle, pi, 2 * k, MPFR_RNDN);
    mpfr_div_ui(angle, angle, conductor(), MPFR_RNDN);
    mpfr_sin_cos(sn, cs, angle, MPFR_RNDN);
    mpfr_set_q(q, coeffs_[k].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(cs, cs, q, MPFR_RNDN);
    mpfr_mul(sn, sn, q, MPFR_RNDN);
    mpfr_add(re, re, cs, MPFR_RNDN);
    mpfr_add(im, im, sn, MPFR_RNDN);
  }
  ComplexApprox out{BigFloat(0, digits10), BigFloat(0, digits10)};
  mpfr_set_prec(out.re.backend().data(), bits);
  mpfr_set_prec(out.im.backend().data(), bits);
  mpfr_set(out.re.backend().data(), re, MPFR_RNDN);
  mpfr_set(out.im.backend().data(), im, MPFR_RNDN);
  for (auto* v : {&re, &im, &angle, &cs, &sn, &q, &pi}) mpfr_clear(*v);
  return out;
}

namespace {
std::string fixed(const BigFloat& x, int digits) {
  std::string s = x.str(digits, std::ios_base::fixed);
  bool all_zero = true;
  for (char c : s)
    if (c >= '1' && c <= '9') all_zero = false;
  if (all_zero && !s.empty() && s[0] == '-') s.erase(0, 1);
  return s;
}
}  // namespace

std::string ComplexApprox::format(int digits) const {
  const std::string r = fixed(re, digits);
  std::string i = fixed(im, digits);
  if (i[0] == '-') return r + i + "i";
  return r + "+" + i + "i";
}

nlohmann::ordered_json CycNum::to_json() const {
  nlohmann::ordered_json j;
  j["conductor"] = conductor();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_)
    arr.push_back({c.get_num().get_str(), c.get_den().get_str()});
  j["coeffs"] = std::move(arr);
  return j;
}

CycNum CycNum::from_json(const nlohmann::ordered_json& j) {
  const auto n = j.at("conductor").get<std::uint32_t>();
  if (n == 0) throw InvalidArgument("conductor must be positive");
  std::vector<Rational> powers;
  for (const auto& pair : j.at("coeffs")) {
    Rational r(BigInt(pair.at(0).get<std::string>()),
               BigInt(pair.at(1).get<std::string>()));
    if (r.get_den() == 0) throw InvalidArgument("zero denominator");
    r.canonicalize();
    powers.push_back(std::move(r));
  }
  if (powers.size() > n) throw InvalidArgument("too many coefficients");
  return from_powers(n, powers);
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << conductor();
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

CycNum sqrt_nat(std::uint64_t n, std::uint32_t hint) {
  if (n == 0) throw InvalidArgument("sqrt_nat requires n >= 1");
  if (hint == 0) hint = 1;
  BigInt square = 1;
  CycNum root(1L);
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= static_cast<unsigned long>(p);
    if (e % 2 == 1) root *= sqrt_prime(static_cast<std::uint32_t>(p));
  }
  if (rest > 1) root *= sqrt_prime(static_cast<std::uint32_t>(rest));
  root = root.scaled(Rational(square));
  if (root.to_complex().real() < 0) root = -root;
  const auto target =
      static_cast<std::uint32_t>(lcm_u64(hint, root.conductor()));
  return root.embed(target);
}

}  // namespace fusia
