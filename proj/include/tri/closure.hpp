#pragma once

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "tri/matrix.hpp"
#include "tri/subspace.hpp"

namespace tri {

// Multiplicative closure of a finite generator set, breadth-first by word
// length then generator index, deduplicated on the exact entry list so
// element discovery (and therefore every witness) is deterministic.
template <class K>
struct ClosureResult {
  std::vector<Matrix<K>> elements;
  std::vector<std::string> words;  // parallel to elements, e.g. "g1*g2"
  bool complete = false;
  int bound = 0;
};

template <class K>
ClosureResult<K> semigroup_closure(const std::vector<Matrix<K>>& gens, int bound) {
  ClosureResult<K> out;
  out.bound = bound;
  std::map<Matrix<K>, int> seen;
  std::deque<int> frontier;
  auto add = [&](const Matrix<K>& m, const std::string& word) -> bool {
    // the zero matrix is absorbing, nilpotent, and fixes every subspace,
    // so it never influences a verdict; keep the closure zero-free
    if (m.is_zero()) return true;
    if (seen.count(m)) return true;
    if (static_cast<int>(out.elements.size()) >= bound) return false;
    seen[m] = static_cast<int>(out.elements.size());
    frontier.push_back(static_cast<int>(out.elements.size()));
    out.elements.push_back(m);
    out.words.push_back(word);
    return true;
  };
  for (size_t g = 0; g < gens.size(); ++g)
    if (!add(gens[g], "g" + std::to_string(g + 1))) {
      out.complete = false;
      return out;
    }
  while (!frontier.empty()) {
    int idx = frontier.front();
    frontier.pop_front();
    for (size_t g = 0; g < gens.size(); ++g) {
      Matrix<K> prod = out.elements[idx] * gens[g];
      if (!add(prod, out.words[idx] + "*g" + std::to_string(g + 1))) return out;
    }
  }
  out.complete = true;
  return out;
}

namespace detail {

// Echelonized span in the coordinate space over the center (the field
// itself, or Q with 4 coordinates per quaternion entry). Keeps one
// representative matrix per independent coordinate vector.
template <class K>
class CoordSpan {
  using T = scalar_traits<K>;
  using F = typename T::coord_field;
  using FT = scalar_traits<F>;

 public:
  static std::vector<F> flatten(const Matrix<K>& m) {
    std::vector<F> v;
    v.reserve(size_t(m.rows()) * m.cols() * T::coord_dim);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        for (const F& c : T::to_coords(m(i, j))) v.push_back(c);
    return v;
  }

  // Returns true if m was independent of the span and got added.
  bool insert(const Matrix<K>& m) {
    std::vector<F> v = flatten(m);
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return false;
    F inv = FT::inv(v[p]);
    for (F& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    reps_.push_back(m);
    return true;
  }

  bool contains(const Matrix<K>& m) const {
    std::vector<F> v = flatten(m);
    reduce(v);
    return first_nonzero(v) < 0;
  }

  int dim() const { return static_cast<int>(reps_.size()); }
  const std::vector<Matrix<K>>& reps() const { return reps_; }

 private:
  void reduce(std::vector<F>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const F& f = v[pivots_[k]];
      if (FT::is_zero(f)) continue;
      F c = f;
      for (size_t i = 0; i < v.size(); ++i) v[i] -= rows_[k][i] * c;
    }
  }
  static int first_nonzero(const std::vector<F>& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (!FT::is_zero(v[i])) return static_cast<int>(i);
    return -1;
  }

  std::vector<std::vector<F>> rows_;
  std::vector<int> pivots_;
  std::vector<Matrix<K>> reps_;
};

}  // namespace detail

// Linear basis of the algebra generated by gens over the center
// (unital if flagged). Dimension is capped by n^2 field coordinates,
// 4n^2 over the quaternions, so the product saturation terminates.
template <class K>
std::vector<Matrix<K>> algebra_span(const std::vector<Matrix<K>>& gens, bool unital) {
  if (gens.empty() && !unital) return {};
  const int n = gens.empty() ? 0 : gens.front().rows();
  detail::CoordSpan<K> span;
  std::deque<Matrix<K>> fresh;
  auto push = [&](const Matrix<K>& m) {
    if (span.insert(m)) fresh.push_back(m);
  };
  if (unital && n > 0) push(Matrix<K>::identity(n));
  for (const auto& g : gens) push(g);
  while (!fresh.empty()) {
    Matrix<K> x = fresh.front();
    fresh.pop_front();
    // products against the current basis in both orders
    std::vector<Matrix<K>> snapshot = span.reps();
    for (const auto& b : snapshot) {
      push(x * b);
      push(b * x);
    }
  }
  return span.reps();
}

// Basis of {X : XG = GX for all generators G}, via the kernel of the
// stacked coordinate maps X -> XG - GX over the center.
template <class K>
std::vector<Matrix<K>> commutant(const std::vector<Matrix<K>>& gens) {
  using T = scalar_traits<K>;
  using F = typename T::coord_field;
  assert(!gens.empty());
  const int n = gens.front().rows();
  const int d = T::coord_dim;
  const int vars = d * n * n;
  // coordinate basis of M_n(K) over the center
  std::vector<Matrix<K>> units;
  units.reserve(vars);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int u = 0; u < d; ++u) {
        std::array<F, T::coord_dim> coords{};
        coords[u] = scalar_traits<F>::one();
        Matrix<K> e(n, n);
        e(r, c) = T::from_coords(coords);
        units.push_back(std::move(e));
      }
  const int rows_per_gen = vars;
  Matrix<F> system(static_cast<int>(gens.size()) * rows_per_gen, vars);
  for (int col = 0; col < vars; ++col) {
    for (size_t g = 0; g < gens.size(); ++g) {
      Matrix<K> bracket = units[col] * gens[g] - gens[g] * units[col];
      std::vector<F> flat = detail::CoordSpan<K>::flatten(bracket);
      for (int r = 0; r < rows_per_gen; ++r)
        system(static_cast<int>(g) * rows_per_gen + r, col) = flat[r];
    }
  }
  std::vector<Matrix<K>> out;
  for (const auto& x : kernel_columns(system)) {
    Matrix<K> m(n, n);
    for (int v = 0; v < vars; ++v) {
      if (scalar_traits<F>::is_zero(x(v, 0))) continue;
      // x-coordinates multiply the coordinate units over the center,
      // where scalars commute, so plain scaling is sound
      m += units[v].scaled_left(K(x(v, 0)));
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Linear basis of span{seed, A seed, seed B, A seed B} over a
// multiplication-closed algebra span: the semigroup ideal generated by
// the seed inside the algebra.
template <class K>
std::vector<Matrix<K>> ideal_span(const std::vector<Matrix<K>>& algebra_basis,
                                  const Matrix<K>& seed) {
  detail::CoordSpan<K> span;
  if (seed.is_zero()) return {};
  span.insert(seed);
  for (const auto& a : algebra_basis) {
    span.insert(a * seed);
    span.insert(seed * a);
    for (const auto& b : algebra_basis) span.insert(a * seed * b);
  }
  return span.reps();
}

// Common kernel of a family: the intersection of the right null spaces.
template <class K>
Subspace<K> common_kernel(const std::vector<Matrix<K>>& family, int n) {
  Subspace<K> acc = Subspace<K>::full(n);
  for (const auto& m : family) {
    acc = subspace_intersect(acc, kernel(m));
    if (acc.is_zero()) break;
  }
  return acc;
}

}  // namespace tri
