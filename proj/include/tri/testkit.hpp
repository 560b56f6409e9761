#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "tri/chain.hpp"
#include "tri/charpoly.hpp"
#include "tri/engine.hpp"
#include "tri/matrix.hpp"
#include "tri/polynomial.hpp"

namespace tri::testkit {

// Deterministic RNG: mt19937_64 outputs are specified bit-exactly, and we
// derive values by modulo rather than std::uniform_int_distribution (whose
// output is implementation-defined), so identical seeds give identical
// instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [lo, hi]
  long integer(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // numerator/denominator height <= 10 keeps closure products desk-scale
  Rational rational(long height = 10) {
    return rat(integer(-height, height), integer(1, height));
  }
  Quaternion quaternion(long height = 10) {
    return {rational(height), rational(height), rational(height), rational(height)};
  }

  template <class K>
  K scalar(long height = 10) {
    if constexpr (std::is_same_v<K, Rational>) {
      return rational(height);
    } else if constexpr (std::is_same_v<K, GfElem>) {
      return GfElem(integer(0, static_cast<long>(GfContext::modulus()) - 1));
    } else {
      return quaternion(height);
    }
  }

 private:
  std::mt19937_64 eng_;
};

enum class InstanceKind {
  Nilpotent,
  Unipotent,
  KaplanskyField,
  KaplanskyQuaternion,
  TnFamilyRecipe,
  IrreduciblePair,
  General,
};

struct InstanceRecipe {
  InstanceKind kind = InstanceKind::General;
  int n = 2;
  std::uint64_t seed = 0;
  int num_generators = 2;
};

// Random invertible conjugator as a product of elementary transvections:
// determinant-free, so the same construction works over the quaternions.
template <class K>
Matrix<K> random_conjugator(int n, Rng& rng, int steps = 0) {
  if (steps == 0) steps = 2 * n;
  Matrix<K> p = Matrix<K>::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = static_cast<int>(rng.integer(0, n - 1));
    int j = static_cast<int>(rng.integer(0, n - 1));
    if (i == j) continue;
    Matrix<K> e = Matrix<K>::identity(n);
    e(i, j) = rng.template scalar<K>(3);
    p *= e;
  }
  return p;
}

template <class K>
struct GeneratedInstance {
  std::vector<Matrix<K>> generators;
  Chain<K> certificate;  // hidden triangularizing chain
  Matrix<K> conjugator;
};

// Generators upper triangular in a hidden basis, diagonal constrained by
// kind, conjugated by a random invertible matrix. The hidden chain is the
// conjugated standard flag.
template <class K>
GeneratedInstance<K> gen_conjugated_flag_family(const InstanceRecipe& recipe) {
  Rng rng(recipe.seed);
  const int n = recipe.n;
  GeneratedInstance<K> out;
  out.conjugator = random_conjugator<K>(n, rng);
  Matrix<K> p_inv = inverse(out.conjugator);
  for (int g = 0; g < recipe.num_generators; ++g) {
    Matrix<K> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m(i, j) = rng.template scalar<K>();
    switch (recipe.kind) {
      case InstanceKind::Nilpotent:
        break;  // zero diagonal
      case InstanceKind::Unipotent:
        for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<K>::one();
        break;
      case InstanceKind::KaplanskyField: {
        K lambda = rng.template scalar<K>(5);
        for (int i = 0; i < n; ++i) m(i, i) = lambda;
        break;
      }
      case InstanceKind::KaplanskyQuaternion: {
        // central constant diagonal
        K lambda;
        if constexpr (std::is_same_v<K, Quaternion>) {
          lambda = Quaternion(rng.rational(5));
        } else {
          lambda = rng.template scalar<K>(5);
        }
        for (int i = 0; i < n; ++i) m(i, i) = lambda;
        break;
      }
      default:
        for (int i = 0; i < n; ++i) m(i, i) = rng.template scalar<K>(5);
        break;
    }
    out.generators.push_back(out.conjugator * m * p_inv);
  }
  out.certificate = Chain<K>::standard_flag(n).conjugated(out.conjugator);
  return out;
}

struct RetriesExhausted : std::runtime_error {
  RetriesExhausted()
      : std::runtime_error("no nonzero commuting strictly-upper N found after 100 retries") {}
};

// T+N instance: upper-triangular T's in the hidden basis, N's drawn from
// the strictly-upper solution space of the stacked commutation system
// [T_i, N] = 0, everything conjugated. Construction invariants hold by
// construction but are re-verified through make_tn_family by callers.
template <class K>
GeneratedInstance<K> gen_tn_family(const InstanceRecipe& recipe,
                                   std::vector<std::pair<Matrix<K>, Matrix<K>>>* pairs) {
  using T = scalar_traits<K>;
  using F = typename T::coord_field;
  Rng rng(recipe.seed);
  const int n = recipe.n;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Matrix<K>> ts;
    for (int g = 0; g < recipe.num_generators; ++g) {
      Matrix<K> t(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          if (i == j) {
            if constexpr (std::is_same_v<K, Quaternion>) {
              t(i, j) = Quaternion(rng.rational(5));  // central inner eigenvalues
            } else {
              t(i, j) = rng.template scalar<K>(5);
            }
          } else {
            t(i, j) = rng.template scalar<K>();
          }
        }
      // matching corner eigenvalues keep E_{1,n} in every T's commutant,
      // so the strictly-upper solution space below is never zero
      t(n - 1, n - 1) = t(0, 0);
      ts.push_back(std::move(t));
    }
    // solve [T_i, N] = 0 over strictly-upper N, in center coordinates
    const int d = T::coord_dim;
    std::vector<Matrix<K>> units;
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c)
        for (int u = 0; u < d; ++u) {
          std::array<F, T::coord_dim> coords{};
          coords[u] = scalar_traits<F>::one();
          Matrix<K> e(n, n);
          e(r, c) = T::from_coords(coords);
          units.push_back(std::move(e));
        }
    if (units.empty()) throw RetriesExhausted();
    const int vars = static_cast<int>(units.size());
    const int rows_per = d * n * n;
    Matrix<F> system(static_cast<int>(ts.size()) * rows_per, vars);
    for (int col = 0; col < vars; ++col)
      for (size_t g = 0; g < ts.size(); ++g) {
        Matrix<K> bracket = ts[g] * units[col] - units[col] * ts[g];
        std::vector<F> flat = detail::CoordSpan<K>::flatten(bracket);
        for (int r = 0; r < rows_per; ++r) system(static_cast<int>(g) * rows_per + r, col) = flat[r];
      }
    std::vector<Matrix<F>> sol = kernel_columns(system);
    if (sol.empty()) continue;  // redraw T's
    GeneratedInstance<K> out;
    Matrix<K> p = random_conjugator<K>(n, rng);
    Matrix<K> p_inv = inverse(p);
    out.conjugator = p;
    for (size_t g = 0; g < ts.size(); ++g) {
      // random combination of the solution space, nonzero if possible
      Matrix<K> nil(n, n);
      for (int tries = 0; tries < 20 && nil.is_zero(); ++tries)
        for (const auto& basis_vec : sol) {
          F coeff = scalar_traits<F>::from_int(rng.integer(-3, 3));
          if (scalar_traits<F>::is_zero(coeff)) continue;
          for (int v = 0; v < vars; ++v)
            if (!scalar_traits<F>::is_zero(basis_vec(v, 0)))
              nil += units[v].scaled_left(K(basis_vec(v, 0) * coeff));
        }
      Matrix<K> tc = p * ts[g] * p_inv;
      Matrix<K> nc = p * nil * p_inv;
      out.generators.push_back(tc + nc);
      pairs->push_back({tc, nc});
    }
    out.certificate = Chain<K>::standard_flag(n).conjugated(p);
    return out;
  }
  throw RetriesExhausted();
}

// ---------------------------------------------------------------------------
// Independent oracles.

// Literal re-implementation of the triangularizability definition over a
// small prime field: enumerate every complete flag and test invariance.
// Independent of the engine's code paths (plain residue arithmetic).
class FlagEnumerationOracle {
 public:
  // gens as n x n residue matrices mod p; n <= 3
  static bool triangularizable(int n, std::uint64_t p,
                               const std::vector<std::vector<std::vector<std::uint64_t>>>& gens) {
    if (n <= 1) return true;
    std::vector<Vec> lines = projective_points(n, p);
    if (n == 2) {
      for (const Vec& v : lines)
        if (all_invariant_line(v, p, gens)) return true;
      return false;
    }
    // n == 3: flags V1 < V2, V2 given by a normal vector of the plane
    for (const Vec& v1 : lines)
      for (const Vec& normal : lines) {
        if (dot(v1, normal, p) != 0) continue;  // v1 must lie in the plane
        if (!all_invariant_line(v1, p, gens)) continue;
        if (all_invariant_plane(normal, p, gens)) return true;
      }
    return false;
  }

 private:
  using Vec = std::vector<std::uint64_t>;

  static std::vector<Vec> projective_points(int n, std::uint64_t p) {
    // normalized: first nonzero coordinate is 1
    std::vector<Vec> out;
    std::vector<std::uint64_t> v(n, 0);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i) {
        v[i] = c % p;
        c /= p;
      }
      int first = -1;
      for (int i = 0; i < n; ++i)
        if (v[i] != 0) {
          first = i;
          break;
        }
      if (first < 0 || v[first] != 1) continue;
      out.push_back(v);
    }
    return out;
  }

  static std::uint64_t dot(const Vec& a, const Vec& b, std::uint64_t p) {
    std::uint64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = (s + a[i] * b[i]) % p;
    return s;
  }

  static Vec apply(const std::vector<std::vector<std::uint64_t>>& g, const Vec& v,
                   std::uint64_t p) {
    Vec w(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j) w[i] = (w[i] + g[i][j] * v[j]) % p;
    return w;
  }

  static bool parallel(const Vec& a, const Vec& b, std::uint64_t p) {
    // b == c*a for some scalar c (b may be zero)
    bool bzero = true;
    for (std::uint64_t x : b)
      if (x != 0) bzero = false;
    if (bzero) return true;
    // find scale from the first nonzero coordinate of a
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) {
        // c = b[i] * a[i]^{-1}
        std::uint64_t inv = 1;
        for (std::uint64_t e = 1; e < p - 1; ++e) inv = (inv * a[i]) % p;  // a^(p-2)
        std::uint64_t c = (b[i] * inv) % p;
        for (size_t j = 0; j < a.size(); ++j)
          if ((a[j] * c) % p != b[j]) return false;
        return true;
      }
    return false;
  }

  static bool all_invariant_line(const Vec& v, std::uint64_t p,
                                 const std::vector<std::vector<std::vector<std::uint64_t>>>& gens) {
    for (const auto& g : gens)
      if (!parallel(v, apply(g, v, p), p)) return false;
    return true;
  }

  static bool all_invariant_plane(const Vec& normal, std::uint64_t p,
                                  const std::vector<std::vector<std::vector<std::uint64_t>>>& gens) {
    // plane {x : normal . x = 0} invariant under g iff normal . (g x) = 0
    // for x in the plane; test on all projective points of the plane
    const int n = static_cast<int>(normal.size());
    for (const Vec& x : projective_points(n, p)) {
      if (dot(normal, x, p) != 0) continue;
      for (const auto& g : gens)
        if (dot(normal, apply(g, x, p), p) != 0) return false;
    }
    return true;
  }
};

template <class K>
Polynomial<K> cofactor_det(const std::vector<std::vector<Polynomial<K>>>& m,
                           std::vector<int> cols, int row) {
  if (cols.empty()) return Polynomial<K>::constant(scalar_traits<K>::one());
  Polynomial<K> det;
  for (size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> rest;
    for (size_t l = 0; l < cols.size(); ++l)
      if (l != k) rest.push_back(cols[l]);
    Polynomial<K> term = m[row][cols[k]] * cofactor_det(m, rest, row + 1);
    det = (k % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// Cofactor-expansion characteristic polynomial over Polynomial<K>:
// a deliberately naive det(xI - A), independent of the Berkowitz path.
template <class K>
Polynomial<K> cofactor_char_poly(const Matrix<K>& a) {
  const int n = a.rows();
  std::vector<std::vector<Polynomial<K>>> m(n, std::vector<Polynomial<K>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i][j] = Polynomial<K>::constant(-a(i, j));
      if (i == j) m[i][j] = m[i][j] + Polynomial<K>::x();
    }
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  return cofactor_det(m, cols, 0);
}

// Singleton-spectrum decision by direct comparison of the cofactor char
// poly against (x - lambda)^n.
template <class K>
std::optional<K> spectrum_oracle(const Matrix<K>& a) {
  using T = scalar_traits<K>;
  static_assert(T::commutative);
  const int n = a.rows();
  Polynomial<K> cp = cofactor_char_poly(a);
  auto matches = [&](const K& lambda) {
    Polynomial<K> lin({-lambda, T::one()});
    return lin.pow(n) == cp;
  };
  if constexpr (std::is_same_v<K, GfElem>) {
    for (std::uint64_t r = 0; r < GfContext::modulus(); ++r) {
      GfElem lambda = GfElem::from_residue(r);
      if (matches(lambda)) return lambda;
    }
    return std::nullopt;
  } else {
    // candidate from the x^{n-1} coefficient: n*lambda = -c_{n-1}
    K lambda = -cp.coeff(n - 1) * T::inv(T::from_int(n));
    if (matches(lambda)) return lambda;
    return std::nullopt;
  }
}

template <class K>
Matrix<K> random_matrix(int n, Rng& rng, long height = 10) {
  Matrix<K> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.template scalar<K>(height);
  return m;
}

}  // namespace tri::testkit
