#pragma once

#include <optional>
#include <vector>

#include "tri/matrix.hpp"
#include "tri/polynomial.hpp"

namespace tri {

// Division-free characteristic polynomial (Berkowitz). Exact over any
// commutative coefficient ring, in particular over GF(p) with small p
// where Faddeev-LeVerrier's divisions by 1..n would fail.
// Returns the monic det(xI - A), constant term first.
template <class K>
Polynomial<K> char_poly(const Matrix<K>& a) {
  using T = scalar_traits<K>;
  static_assert(T::commutative, "char_poly requires a field ring");
  const int n = a.rows();
  assert(n == a.cols());
  if (n == 0) return Polynomial<K>::constant(T::one());
  // vect holds descending coefficients of the char poly of the leading
  // principal i x i submatrix
  std::vector<K> vect{T::one(), -a(0, 0)};
  for (int i = 1; i < n; ++i) {
    // t[0] = 1, t[1] = -a_ii, t[j] = -(R M^{j-2} C) for j = 2..i+1,
    // with R the left row slice, C the top column slice, M the leading block
    std::vector<K> t(i + 2, T::zero());
    t[0] = T::one();
    t[1] = -a(i, i);
    std::vector<K> w(i);
    for (int r = 0; r < i; ++r) w[r] = a(r, i);
    for (int j = 2; j <= i + 1; ++j) {
      K dot = T::zero();
      for (int r = 0; r < i; ++r) dot += a(i, r) * w[r];
      t[j] = -dot;
      if (j <= i) {
        std::vector<K> w2(i, T::zero());
        for (int r = 0; r < i; ++r)
          for (int s = 0; s < i; ++s) w2[r] += a(r, s) * w[s];
        w = std::move(w2);
      }
    }
    std::vector<K> next(i + 2, T::zero());
    for (int r = 0; r < i + 2; ++r)
      for (size_t c = 0; c < vect.size(); ++c)
        if (r >= int(c) && r - int(c) < int(t.size())) next[r] += t[r - c] * vect[c];
    vect = std::move(next);
  }
  std::vector<K> ascending(vect.rbegin(), vect.rend());
  return Polynomial<K>(std::move(ascending));
}

template <class K>
struct Spectrum {
  std::vector<std::pair<K, int>> eigenvalues;  // roots in the field, with multiplicity
  bool split = false;                          // multiplicities sum to n
};

// Roots of the characteristic polynomial lying in the coefficient field.
inline Spectrum<Rational> eigenvalues_in_field(const Matrix<Rational>& a) {
  Spectrum<Rational> s;
  s.eigenvalues = rational_roots(char_poly(a));
  int total = 0;
  for (const auto& [v, m] : s.eigenvalues) total += m;
  s.split = (total == a.rows());
  return s;
}

inline Spectrum<GfElem> eigenvalues_in_field(const Matrix<GfElem>& a) {
  Spectrum<GfElem> s;
  s.eigenvalues = gf_roots(char_poly(a));
  int total = 0;
  for (const auto& [v, m] : s.eigenvalues) total += m;
  s.split = (total == a.rows());
  return s;
}

// The unique lambda with spectrum(A) = {lambda} over the algebraic closure,
// if any. In characteristic 0 (or p not dividing n) the only candidate is
// trace/n; when p | n every residue is tried.
inline std::optional<Rational> singleton_spectrum(const Matrix<Rational>& a) {
  const int n = a.rows();
  if (n == 0) return std::nullopt;
  Rational lambda = a.trace() / n;
  Matrix<Rational> shifted = a - Matrix<Rational>::scalar(n, lambda);
  if (is_nilpotent(shifted)) return lambda;
  return std::nullopt;
}

inline std::optional<GfElem> singleton_spectrum(const Matrix<GfElem>& a) {
  const int n = a.rows();
  if (n == 0) return std::nullopt;
  const std::uint64_t p = GfContext::modulus();
  if (n % p != 0) {
    GfElem lambda = a.trace() * GfElem(n).inv();
    if (is_nilpotent(a - Matrix<GfElem>::scalar(n, lambda))) return lambda;
    return std::nullopt;
  }
  for (std::uint64_t r = 0; r < p; ++r) {
    GfElem lambda = GfElem::from_residue(r);
    if (is_nilpotent(a - Matrix<GfElem>::scalar(n, lambda))) return lambda;
  }
  return std::nullopt;
}

// 4x4 rational matrix of left multiplication by q on H = Q^4
// in coordinates (1, i, j, k).
inline Matrix<Rational> left_mult_matrix(const Quaternion& q) {
  Matrix<Rational> m(4, 4);
  m(0, 0) = q.a; m(0, 1) = -q.b; m(0, 2) = -q.c; m(0, 3) = -q.d;
  m(1, 0) = q.b; m(1, 1) = q.a;  m(1, 2) = -q.d; m(1, 3) = q.c;
  m(2, 0) = q.c; m(2, 1) = q.d;  m(2, 2) = q.a;  m(2, 3) = -q.b;
  m(3, 0) = q.d; m(3, 1) = -q.c; m(3, 2) = q.b;  m(3, 3) = q.a;
  return m;
}

// Q-linear realification of the left action of A on H^n: a 4n x 4n rational
// matrix. An injective algebra homomorphism, so nilpotency and central
// shifts transfer both ways.
inline Matrix<Rational> realify(const Matrix<Quaternion>& a) {
  const int n = a.rows();
  Matrix<Rational> m(4 * a.rows(), 4 * a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      Matrix<Rational> block = left_mult_matrix(a(r, c));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(4 * r + i, 4 * c + j) = block(i, j);
    }
  return m;
}

// The unique central c in Q with (A - cI)^n = 0, if one exists. If it does,
// the realification R(A) - cI is nilpotent, forcing c = tr R(A) / 4n =
// (sum of real parts of the diagonal) / n; the single candidate is then
// confirmed by direct nilpotency over the quaternions.
inline std::optional<Rational> central_spectrum_quaternion(const Matrix<Quaternion>& a) {
  const int n = a.rows();
  if (n == 0) return std::nullopt;
  Rational c(0);
  for (int i = 0; i < n; ++i) c += a(i, i).a;
  c /= n;
  if (is_nilpotent(a - Matrix<Quaternion>::scalar(n, Quaternion(c)))) return c;
  return std::nullopt;
}

// Detects the shape A = qI + N with q a non-central quaternion and N
// nilpotent: the realification's characteristic polynomial is then a
// perfect 2n-th power of the irreducible quadratic x^2 - 2 Re(q) x + |q|^2.
inline bool has_noncentral_scalar_part(const Matrix<Quaternion>& a) {
  const int n = a.rows();
  if (n == 0) return false;
  if (central_spectrum_quaternion(a)) return false;
  Polynomial<Rational> cp = char_poly(realify(a));
  // read the quadratic off the two top coefficients of (x^2 + ax + b)^{2n}
  const int deg = 4 * n;
  Rational alpha = cp.coeff(deg - 1) / (2 * n);
  Rational beta = (cp.coeff(deg - 2) - Rational(2 * n * (2 * n - 1)) / 2 * alpha * alpha) / (2 * n);
  Polynomial<Rational> quad({beta, alpha, Rational(1)});
  if (quad.pow(2 * n) != cp) return false;
  Rational disc = alpha * alpha - 4 * beta;
  return disc < 0;  // irreducible quadratic <=> genuinely non-central part
}

}  // namespace tri
