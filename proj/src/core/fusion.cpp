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
#include "fusion.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "parallel.hpp"

namespace fusia {

FusionAlgebra::FusionAlgebra(std::vector<std::string> labels,
                             std::vector<std::int64_t> tensor,
                             std::vector<int> dual)
    : n_(labels.size()),
      labels_(std::move(labels)),
      tensor_(std::move(tensor)),
      dual_(std::move(dual)) {
  if (tensor_.size() != n_ * n_ * n_ || dual_.size() != n_)
    throw InvalidArgument("fusion algebra: inconsistent shapes");
}

int FusionAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::vector<std::pair<int, std::int64_t>> FusionAlgebra::product(int i, int j) const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (int k = 0; k < size(); ++k)
    if (N(i, j, k) != 0) out.emplace_back(k, N(i, j, k));
  return out;
}

std::string FusionAlgebra::product_string(int i, int j) const {
  const auto terms = product(i, j);
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [k, m] : terms) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += labels_[k];
  }
  return s;
}

std::string FusionAlgebra::table_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j)
      os << labels_[i] << " x " << labels_[j] << " = " << product_string(i, j) << "\n";
  return os.str();
}

nlohmann::ordered_json FusionAlgebra::to_json() const {
  nlohmann::ordered_json j;
  j["labels"] = labels_;
  j["dual"] = dual_;
  auto outer = nlohmann::ordered_json::array();
  for (int a = 0; a < size(); ++a) {
    auto mid = nlohmann::ordered_json::array();
    for (int b = 0; b < size(); ++b) {
      auto inner = nlohmann::ordered_json::array();
      for (int c = 0; c < size(); ++c) inner.push_back(N(a, b, c));
      mid.push_back(std::move(inner));
    }
    outer.push_back(std::move(mid));
  }
  j["N"] = std::move(outer);
  return j;
}

FusionAlgebra FusionAlgebra::with_entry(int i, int j, int k, std::int64_t value) const {
  FusionAlgebra f = *this;
  f.tensor_.at((static_cast<std::size_t>(i) * n_ + j) * n_ + k) = value;
  return f;
}

namespace {

// Arithmetic in F_p for a prime p = 1 (mod conductor), used to guess the
// integer coefficients before they are verified exactly.
class ModP {
 public:
  explicit ModP(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Image of the s-matrix in F_p under zeta_N -> r, and the inverse of that
// image. Empty when p divides a denominator or the image is singular.
struct ModImage {
  std::vector<std::uint64_t> s, inv;
};

std::optional<ModImage> reduce_mod(const CycMatrix& s, std::uint32_t n, const ModP& f,
                                   std::uint64_t root) {
  const std::size_t dim = s.rows();
  const auto deg = CyclotomicField::get(n)->degree;
  std::vector<std::uint64_t> powers(deg);
  powers[0] = 1;
  for (std::size_t k = 1; k < deg; ++k) powers[k] = f.mul(powers[k - 1], root);
  ModImage img;
  img.s.resize(dim * dim);
  mpz_class num, den;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& c = s(i, j).coeffs();
      std::uint64_t v = 0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        num = c[k].get_num();
        den = c[k].get_den();
        const std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), f.p());
        if (d == 0) return std::nullopt;
        const std::uint64_t a = mpz_fdiv_ui(num.get_mpz_t(), f.p());
        v = f.add(v, f.mul(f.mul(a, f.inv(d)), powers[k]));
      }
      img.s[i * dim + j] = v;
    }
  // Gauss-Jordan on [s | I].
  std::vector<std::uint64_t> a = img.s;
  img.inv.assign(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) img.inv[i * dim + i] = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t p = k;
    while (p < dim && a[p * dim + k] == 0) ++p;
    if (p == dim) return std::nullopt;
    if (p != k)
      for (std::size_t j = 0; j < dim; ++j) {
        std::swap(a[k * dim + j], a[p * dim + j]);
        std::swap(img.inv[k * dim + j], img.inv[p * dim + j]);
      }
    const std::uint64_t pi = f.inv(a[k * dim + k]);
    for (std::size_t j = 0; j < dim; ++j) {
      a[k * dim + j] = f.mul(a[k * dim + j], pi);
      img.inv[k * dim + j] = f.mul(img.inv[k * dim + j], pi);
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == k || a[i * dim + k] == 0) continue;
      const std::uint64_t m = a[i * dim + k];
      for (std::size_t j = 0; j < dim; ++j) {
        a[i * dim + j] = f.sub(a[i * dim + j], f.mul(m, a[k * dim + j]));
        img.inv[i * dim + j] = f.sub(img.inv[i * dim + j], f.mul(m, img.inv[k * dim + j]));
      }
    }
  }
  return img;
}

struct Guesser {
  std::optional<ModP> field;
  ModImage image;
};

Guesser make_guesser(const CycMatrix& s, std::uint32_t n) {
  Guesser g;
  const std::uint64_t limit = (std::uint64_t{1} << 31) - 1;
  int tried = 0;
  for (std::uint64_t t = (limit - 1) / n; t > 0 && tried < 8; --t) {
    const std::uint64_t p = t * n + 1;
    if (!is_prime(p)) continue;
    ++tried;
    const ModP f(p);
    std::uint64_t root = 0;
    const auto factors = prime_factors(n);
    for (std::uint64_t base = 2; base < p && root == 0; ++base) {
      const std::uint64_t r = f.pow(base, (p - 1) / n);
      bool primitive = true;
      for (auto q : factors)
        if (f.pow(r, n / q) == 1) primitive = false;
      if (primitive) root = r;
    }
    if (root == 0) continue;
    if (auto img = reduce_mod(s, n, f, root)) {
      g.field = f;
      g.image = std::move(*img);
      return g;
    }
  }
  return g;
}

void throw_offending(const std::vector<CycNum>& x, int i, int j) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto v = x[k].as_integer();
    if (!v || sgn(*v) < 0)
      throw NotFusionMatrix("not a fusion s-matrix: coefficient of column " +
                                std::to_string(k) + " in column " + std::to_string(i) +
                                " * column " + std::to_string(j) + " is " +
                                x[k].to_string(),
                            i, j, static_cast<int>(k));
  }
}

}  // namespace

std::vector<int> dual_from_tensor(int n, const std::vector<std::int64_t>& tensor) {
  std::vector<int> dual(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t v = tensor[(static_cast<std::size_t>(i) * n + j) * n];
      if (v == 0) continue;
      if (v != 1 || dual[i] != -1)
        throw NotFusionMatrix("no unique dual for basis element " + std::to_string(i),
                              i, j, 0);
      dual[i] = j;
    }
    if (dual[i] == -1)
      throw NotFusionMatrix("basis element " + std::to_string(i) + " has no dual", i,
                            i, 0);
  }
  return dual;
}

FusionAlgebra from_smatrix(const CycMatrix& s_in, std::vector<std::string> labels) {
  if (!s_in.square() || s_in.rows() == 0)
    throw InvalidArgument("s-matrix must be square and non-empty");
  const int n = static_cast<int>(s_in.rows());
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n)
    throw InvalidArgument("label count does not match the s-matrix");
  for (int r = 0; r < n; ++r)
    if (!(s_in(r, 0) == CycNum(1L)))
      throw InvalidArgument("column 0 of an s-matrix must be all ones");

  CycMatrix s = s_in;
  s.unify();
  const std::uint32_t cond = s.conductor();
  const Guesser guess = make_guesser(s, cond);
  // A nonzero determinant mod p certifies invertibility; otherwise ask the
  // exact determinant.
  if (!guess.field && det(s).is_zero()) throw SingularMatrix("s-matrix is singular");

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::int64_t> tensor(static_cast<std::size_t>(n) * n * n, 0);
  const auto at = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  };

  // Failures are collected per pair so the reported one does not depend on
  // scheduling.
  std::vector<std::optional<NotFusionMatrix>> errors(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t idx) {
    try {
    const auto [i, j] = pairs[idx];
    std::vector<CycNum> prod(n);
    for (int r = 0; r < n; ++r) prod[r] = s(r, i) * s(r, j);

    std::vector<std::int64_t> x(n, 0);
    bool verified = false;
    if (guess.field) {
      const ModP& f = *guess.field;
      const auto& img = guess.image;
      std::vector<std::uint64_t> b(n);
      for (int r = 0; r < n; ++r) b[r] = f.mul(img.s[r * n + i], img.s[r * n + j]);
      for (int k = 0; k < n; ++k) {
        std::uint64_t v = 0;
        for (int r = 0; r < n; ++r) v = f.add(v, f.mul(img.inv[k * n + r], b[r]));
        x[k] = v > f.p() / 2 ? static_cast<std::int64_t>(v) - static_cast<std::int64_t>(f.p())
                             : static_cast<std::int64_t>(v);
      }
      verified = true;
      for (int r = 0; r < n && verified; ++r) {
        CycNum acc = CycNum(0L).embed(cond);
        for (int k = 0; k < n; ++k)
          if (x[k] != 0) acc.add_scaled(s(r, k), x[k]);
        verified = acc == prod[r];
      }
    }
    if (!verified) {
      const auto exact = solve(s, prod);
      throw_offending(exact, i, j);
      for (int k = 0; k < n; ++k) x[k] = exact[k].as_integer()->get_si();
    }
    for (int k = 0; k < n; ++k)
      if (x[k] < 0)
        throw NotFusionMatrix("not a fusion s-matrix: coefficient of column " +
                                  std::to_string(k) + " in column " + std::to_string(i) +
                                  " * column " + std::to_string(j) + " is " +
                                  std::to_string(x[k]),
                              i, j, k);
    for (int k = 0; k < n; ++k) {
      tensor[at(i, j, k)] = x[k];
      tensor[at(j, i, k)] = x[k];
    }
    } catch (const NotFusionMatrix& e) {
      errors[idx] = e;
    }
  });
  for (const auto& e : errors)
    if (e) throw *e;

  auto dual = dual_from_tensor(n, tensor);
  return FusionAlgebra(std::move(labels), std::move(tensor), std::move(dual));
}

std::vector<int> involution_from_s(const CycMatrix& S) {
  const CycMatrix sq = S * S;
  const int n = static_cast<int>(S.rows());
  std::vector<int> perm(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sq(i, j).is_zero()) continue;
      if (!(sq(i, j) == CycNum(1L)) || perm[i] != -1)
        throw InvalidArgument("S^2 is not a permutation matrix");
      perm[i] = j;
    }
  for (int i = 0; i < n; ++i)
    if (perm[i] == -1) throw InvalidArgument("S^2 is not a permutation matrix");
  return perm;
}

VerlindeReport verlinde_check(const CycMatrix& S_in, const FusionAlgebra& f) {
  const int n = static_cast<int>(S_in.rows());
  if (!S_in.square() || n != f.size())
    throw InvalidArgument("S-matrix and fusion algebra sizes differ");
  CycMatrix S = S_in;
  S.unify();
  const CycMatrix Sc = S.conj();
  std::vector<CycNum> inv0(n);
  for (int k = 0; k < n; ++k) {
    if (S(k, 0).is_zero()) throw InvalidArgument("S has a vanishing first column entry");
    inv0[k] = S(k, 0).inv();
  }
  VerlindeReport rep;
  std::vector<std::vector<Mismatch>> found(static_cast<std::size_t>(n) * n);
  parallel_for(found.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / n, j = static_cast<int>(idx) % n;
    std::vector<CycNum> t(n);
    for (int k = 0; k < n; ++k) t[k] = S(k, i) * S(k, j) * inv0[k];
    for (int m = 0; m < n; ++m) {
      CycNum sum;
      for (int k = 0; k < n; ++k)
        if (!t[k].is_zero() && !Sc(k, m).is_zero()) sum += t[k] * Sc(k, m);
      if (!(sum == CycNum(Rational(f.N(i, j, m)))))
        found[idx].push_back({i, j, m, f.N(i, j, m), sum.to_string()});
    }
  });
  rep.checked = static_cast<std::size_t>(n) * n * n;
  for (auto& v : found)
    for (auto& m : v) rep.mismatches.push_back(std::move(m));
  rep.ok = rep.mismatches.empty();
  return rep;
}

AxiomReport check_axioms(const FusionAlgebra& f) {
  AxiomReport rep;
  const int n = f.size();
  auto fail = [&](const std::string& msg) {
    if (rep.violations.size() < 20) rep.violations.push_back(msg);
    ++rep.total;
  };
  auto triple = [&](int i, int j, int k) {
    return "(" + f.label(i) + ", " + f.label(j) + ", " + f.label(k) + ")";
  };
  if (n == 0) {
    fail("empty basis");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto v = f.N(i, j, k);
        if (v < 0) fail("negative structure constant at " + triple(i, j, k));
        if (v != f.N(j, i, k)) fail("not commutative at " + triple(i, j, k));
        if (i == 0 && v != (j == k ? 1 : 0)) fail("unit law fails at " + triple(i, j, k));
      }

  const auto& d = f.duals();
  bool perm_ok = true;
  for (int i = 0; i < n; ++i)
    if (d[i] < 0 || d[i] >= n || d[d[i]] != i) {
      fail("dual is not an involution at " + f.label(i));
      perm_ok = false;
      break;
    }
  if (perm_ok) {
    if (d[0] != 0) fail("dual does not fix the unit");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (f.N(d[i], j, 0) != (i == j ? 1 : 0))
          fail("N_{d(i) j}^0 != delta_ij at " + triple(i, j, 0));
        for (int k = 0; k < n; ++k)
          if (f.N(d[i], d[j], k) != f.N(i, j, d[k]))
            fail("dual is not an anti-automorphism at " + triple(i, j, k));
      }
  }

  // Associativity over sparse product lists.
  std::vector<std::vector<std::pair<int, std::int64_t>>> prods(
      static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prods[static_cast<std::size_t>(i) * n + j] = f.product(i, j);
  std::vector<std::vector<std::string>> assoc(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    std::vector<std::int64_t> lhs(n), rhs(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [m, c] : prods[static_cast<std::size_t>(i) * n + j])
          for (const auto& [l, c2] : prods[static_cast<std::size_t>(m) * n + k])
            lhs[l] += c * c2;
        for (const auto& [m, c] : prods[static_cast<std::size_t>(j) * n + k])
          for (const auto& [l, c2] : prods[static_cast<std::size_t>(i) * n + m])
            rhs[l] += c * c2;
        if (lhs != rhs) assoc[ii].push_back("not associative at " + triple(i, j, k));
      }
  });
  for (const auto& v : assoc)
    for (const auto& m : v) fail(m);
  return rep;
}

FusionAlgebra group_ring(int n) {
  if (n < 1) throw InvalidArgument("group order must be positive");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  std::vector<std::int64_t> t(static_cast<std::size_t>(n) * n * n, 0);
  std::vector<int> dual(n);
  for (int i = 0; i < n; ++i) {
    dual[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) t[(static_cast<std::size_t>(i) * n + j) * n + (i + j) % n] = 1;
  }
  return FusionAlgebra(std::move(labels), std::move(t), std::move(dual));
}

FusionAlgebra tensor_product(const FusionAlgebra& f, const FusionAlgebra& g) {
  const int a = f.size(), b = g.size(), n = a * b;
  std::vector<std::string> labels;
  std::vector<int> dual;
  for (int i = 0; i < a; ++i)
    for (int i2 = 0; i2 < b; ++i2) {
      labels.push_back("(" + f.label(i) + "," + g.label(i2) + ")");
      dual.push_back(f.dual(i) * b + g.dual(i2));
    }
  std::vector<std::int64_t> t(static_cast<std::size_t>(n) * n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        t[(static_cast<std::size_t>(x) * n + y) * n + z] =
            f.N(x / b, y / b, z / b) * g.N(x % b, y % b, z % b);
  return FusionAlgebra(std::move(labels), std::move(t), std::move(dual));
}

FusionAlgebra a1_level2() {
  CycMatrix k(3, 3);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      k(a - 1, b - 1) = CycNum::root_of_unity(8, a * b) - CycNum::root_of_unity(8, -a * b);
  CycMatrix s(3, 3);
  for (int r = 0; r < 3; ++r) {
    const CycNum inv = k(r, 0).inv();
    for (int c = 0; c < 3; ++c) s(r, c) = k(r, c) * inv;
  }
  return from_smatrix(s, {"0", "1", "2"});
}

}  // namespace fusia
