#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tri/scalar.hpp"

namespace tri {

// Dense polynomial, constant term first. For quaternion coefficients the
// variable is central (it commutes with the coefficients), which is the
// only case the engine needs.
template <class K>
class Polynomial {
  using T = scalar_traits<K>;

 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const K& v) { return Polynomial(std::vector<K>{v}); }
  static Polynomial x() {
    return Polynomial(std::vector<K>{T::zero(), T::one()});
  }

  const std::vector<K>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const K& operator[](int i) const { return c_[i]; }
  K coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : T::zero(); }
  const K& leading() const { return c_.back(); }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    std::vector<K> r(std::max(f.c_.size(), g.c_.size()), T::zero());
    for (size_t i = 0; i < f.c_.size(); ++i) r[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) r[i] += g.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    std::vector<K> r(std::max(f.c_.size(), g.c_.size()), T::zero());
    for (size_t i = 0; i < f.c_.size(); ++i) r[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) r[i] -= g.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial();
    std::vector<K> r(f.c_.size() + g.c_.size() - 1, T::zero());
    for (size_t i = 0; i < f.c_.size(); ++i)
      for (size_t j = 0; j < g.c_.size(); ++j) r[i + j] += f.c_[i] * g.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial pow(int e) const {
    Polynomial r = constant(T::one());
    Polynomial b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      if (e > 1) b = b * b;
    }
    return r;
  }

  K eval(const K& x) const {
    K r = T::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

 private:
  void trim() {
    while (!c_.empty() && T::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

// Division with remainder over a field (requires commutative K).
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> poly_divmod(const Polynomial<K>& f,
                                                    const Polynomial<K>& g) {
  using T = scalar_traits<K>;
  static_assert(T::commutative);
  assert(!g.is_zero());
  std::vector<K> rem(f.coeffs());
  const int dg = g.degree();
  if (f.degree() < dg) return {Polynomial<K>(), f};
  std::vector<K> quo(f.degree() - dg + 1, T::zero());
  K lead_inv = T::inv(g.leading());
  for (int i = f.degree(); i >= dg; --i) {
    K q = rem[i] * lead_inv;
    if (T::is_zero(q)) continue;
    quo[i - dg] = q;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g[j];
  }
  return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

// Monic gcd over a field.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> f, Polynomial<K> g) {
  using T = scalar_traits<K>;
  while (!g.is_zero()) {
    auto [q, r] = poly_divmod(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (f.is_zero()) return f;
  std::vector<K> c = f.coeffs();
  K inv = T::inv(f.leading());
  for (K& v : c) v *= inv;
  return Polynomial<K>(std::move(c));
}

namespace detail {

// Factorization of |v| by trial division plus Pollard rho, used only to
// enumerate divisor candidates for the rational root theorem.
inline void factor_mpz(mpz_class v, std::map<mpz_class, int>& out) {
  if (v < 0) v = -v;
  if (v <= 1) return;
  for (long d : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (v % d == 0) {
      ++out[mpz_class(d)];
      v /= d;
    }
  }
  mpz_class d = 17;
  while (d * d <= v && d < 100000) {
    while (v % d == 0) {
      ++out[d];
      v /= d;
    }
    d += 2;
  }
  if (v == 1) return;
  if (mpz_probab_prime_p(v.get_mpz_t(), 30)) {
    ++out[v];
    return;
  }
  // Pollard rho (Brent variant would be faster; plain rho is enough here)
  mpz_class x = 2, y = 2, c = 1, g = 1;
  while (true) {
    x = 2, y = 2, g = 1;
    while (g == 1) {
      x = (x * x + c) % v;
      y = (y * y + c) % v;
      y = (y * y + c) % v;
      mpz_class diff = x > y ? x - y : y - x;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), v.get_mpz_t());
    }
    if (g != v) break;
    c += 1;
  }
  factor_mpz(g, out);
  factor_mpz(v / g, out);
}

inline std::vector<mpz_class> divisors(const mpz_class& v) {
  std::map<mpz_class, int> f;
  factor_mpz(v, f);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : f) {
    size_t base = out.size();
    mpz_class pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t k = 0; k < base; ++k) out.push_back(out[k] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// All rational roots of f with multiplicities, ascending by value.
inline std::vector<std::pair<Rational, int>> rational_roots(Polynomial<Rational> f) {
  std::vector<std::pair<Rational, int>> out;
  if (f.is_zero() || f.degree() == 0) return out;
  // root at zero
  int zmult = 0;
  std::vector<Rational> c = f.coeffs();
  while (!c.empty() && c.front() == 0) {
    c.erase(c.begin());
    ++zmult;
  }
  f = Polynomial<Rational>(std::move(c));
  // clear denominators
  mpz_class den_lcm = 1;
  for (const Rational& v : f.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<mpz_class> zc;
  for (const Rational& v : f.coeffs())
    zc.push_back(mpz_class(v.get_num() * (den_lcm / v.get_den())));
  // candidates p/q with p | constant, q | leading
  std::vector<Rational> candidates;
  if (f.degree() >= 1) {
    for (const mpz_class& p : detail::divisors(zc.front()))
      for (const mpz_class& q : detail::divisors(zc.back())) {
        Rational r(p, q);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end(),
              [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }
  for (const Rational& r : candidates) {
    int mult = 0;
    while (!f.is_zero() && f.degree() >= 1 && f.eval(r) == 0) {
      Polynomial<Rational> lin({-r, Rational(1)});
      auto [q, rem] = poly_divmod(f, lin);
      assert(rem.is_zero());
      f = std::move(q);
      ++mult;
    }
    if (mult > 0) out.push_back({r, mult});
  }
  if (zmult > 0) {
    out.push_back({Rational(0), zmult});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
  }
  return out;
}

// All roots in GF(p) with multiplicities, ascending by residue.
// Exhaustive over the p residues; callers cap p.
inline std::vector<std::pair<GfElem, int>> gf_roots(Polynomial<GfElem> f) {
  std::vector<std::pair<GfElem, int>> out;
  if (f.is_zero() || f.degree() == 0) return out;
  const std::uint64_t p = GfContext::modulus();
  for (std::uint64_t r = 0; r < p && f.degree() >= 1; ++r) {
    GfElem x = GfElem::from_residue(r);
    int mult = 0;
    while (f.degree() >= 1 && f.eval(x) == GfElem()) {
      Polynomial<GfElem> lin({-x, GfElem(1)});
      auto [q, rem] = poly_divmod(f, lin);
      assert(rem.is_zero());
      f = std::move(q);
      ++mult;
    }
    if (mult > 0) out.push_back({x, mult});
  }
  return out;
}

}  // namespace tri
