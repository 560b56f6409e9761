#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tri/matrix.hpp"

namespace tri {

template <class K>
struct NotInvariant : std::runtime_error {
  Matrix<K> witness;  // vector mapped outside the subspace
  explicit NotInvariant(Matrix<K> w)
      : std::runtime_error("subspace not invariant"), witness(std::move(w)) {}
};

// Right subspace of the column space, stored as a canonical reduced column
// echelon basis: pivots normalized to 1, pivot rows zero in all other
// columns, columns ordered by pivot row. The canonical form is unique per
// subspace, so structural equality equals subspace equality.
template <class K>
class Subspace {
  using T = scalar_traits<K>;

 public:
  explicit Subspace(int ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim) {
    Subspace s(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) {
      s.basis_.push_back(Matrix<K>::identity(ambient_dim).column(i));
      s.pivots_.push_back(i);
    }
    return s;
  }
  static Subspace span(int ambient_dim, const std::vector<Matrix<K>>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }
  // Columns of m.
  static Subspace col_span(const Matrix<K>& m) {
    Subspace s(m.rows());
    for (int c = 0; c < m.cols(); ++c) s.insert(m.column(c));
    return s;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ambient_; }
  const std::vector<Matrix<K>>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  Matrix<K> basis_matrix() const {
    Matrix<K> m(ambient_, dim());
    for (int c = 0; c < dim(); ++c) m.set_column(c, basis_[c]);
    return m;
  }

  // Reduces v against the basis; adds the remainder as a new basis column
  // if nonzero. Keeps the reduced column echelon invariants. Returns true
  // if the dimension grew.
  bool insert(Matrix<K> v) {
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return false;
    // normalize pivot to 1 by right multiplication (right span unchanged)
    K c = T::inv(v(p, 0));
    v = v.scaled_right(c);
    // clear row p in existing columns
    for (auto& b : basis_) {
      const K& f = b(p, 0);
      if (!T::is_zero(f)) b = b - v.scaled_right(f);
    }
    // keep columns ordered by pivot row
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    basis_.insert(basis_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
  }

  bool contains(Matrix<K> v) const {
    reduce(v);
    return first_nonzero(v) < 0;
  }
  bool contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  // Coordinates of v in the canonical basis (read off the pivot rows),
  // or nullopt if v is outside the subspace.
  std::optional<Matrix<K>> coordinates(const Matrix<K>& v) const {
    Matrix<K> x(dim(), 1);
    for (int k = 0; k < dim(); ++k) x(k, 0) = v(pivots_[k], 0);
    Matrix<K> rebuilt(ambient_, 1);
    for (int k = 0; k < dim(); ++k) rebuilt += basis_[k].scaled_right(x(k, 0));
    if (rebuilt != v) return std::nullopt;
    return x;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  void reduce(Matrix<K>& v) const {
    for (int k = 0; k < dim(); ++k) {
      const K& f = v(pivots_[k], 0);
      if (!T::is_zero(f)) v = v - basis_[k].scaled_right(f);
    }
  }
  static int first_nonzero(const Matrix<K>& v) {
    for (int i = 0; i < v.rows(); ++i)
      if (!T::is_zero(v(i, 0))) return i;
    return -1;
  }

  int ambient_;
  std::vector<Matrix<K>> basis_;
  std::vector<int> pivots_;
};

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& u, const Subspace<K>& w) {
  assert(u.ambient_dim() == w.ambient_dim());
  Subspace<K> s = u;
  for (const auto& b : w.basis()) s.insert(b);
  return s;
}

// Intersection via the kernel of the stacked system U a = -W b.
template <class K>
Subspace<K> subspace_intersect(const Subspace<K>& u, const Subspace<K>& w) {
  assert(u.ambient_dim() == w.ambient_dim());
  const int n = u.ambient_dim();
  if (u.is_zero() || w.is_zero()) return Subspace<K>::zero(n);
  Matrix<K> stacked = Matrix<K>::hcat(u.basis_matrix(), w.basis_matrix());
  Subspace<K> out(n);
  for (const auto& x : kernel_columns(stacked)) {
    Matrix<K> v(n, 1);
    for (int k = 0; k < u.dim(); ++k) v += u.basis()[k].scaled_right(x(k, 0));
    out.insert(v);
  }
  return out;
}

// Right null space of m as a canonical subspace of the column space.
template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
  return Subspace<K>::span(m.cols(), kernel_columns(m));
}

// Invertible P whose first dim(U) columns span U; the complement is the
// deterministic choice of standard coordinate vectors at non-pivot rows.
template <class K>
Matrix<K> extend_to_basis(const Subspace<K>& u) {
  const int n = u.ambient_dim();
  Matrix<K> p(n, n);
  int c = 0;
  for (const auto& b : u.basis()) p.set_column(c++, b);
  std::vector<bool> used(n, false);
  for (int pv : u.pivots()) used[pv] = true;
  for (int r = 0; r < n; ++r)
    if (!used[r]) p.set_column(c++, Matrix<K>::identity(n).column(r));
  return p;
}

// Image g(U) as a subspace.
template <class K>
Subspace<K> image_of(const Matrix<K>& g, const Subspace<K>& u) {
  Subspace<K> out(g.rows());
  for (const auto& b : u.basis()) out.insert(g * b);
  return out;
}

template <class K>
bool is_invariant(const Matrix<K>& g, const Subspace<K>& u) {
  for (const auto& b : u.basis())
    if (!u.contains(g * b)) return false;
  return true;
}

// Preimage {x : g x in U}.
template <class K>
Subspace<K> preimage(const Matrix<K>& g, const Subspace<K>& u) {
  const int n = g.cols();
  if (u.is_zero()) return kernel(g);
  Matrix<K> stacked = Matrix<K>::hcat(g, -u.basis_matrix());
  Subspace<K> out(n);
  for (const auto& x : kernel_columns(stacked)) {
    Matrix<K> v(n, 1);
    for (int i = 0; i < n; ++i) v(i, 0) = x(i, 0);
    out.insert(v);
  }
  return out;
}

// Matrix of A restricted to the A-invariant subspace U, in U's canonical
// basis. Throws NotInvariant (with the escaping image vector) otherwise.
template <class K>
Matrix<K> restrict_to(const Matrix<K>& a, const Subspace<K>& u) {
  Matrix<K> m(u.dim(), u.dim());
  for (int c = 0; c < u.dim(); ++c) {
    Matrix<K> w = a * u.basis()[c];
    auto x = u.coordinates(w);
    if (!x) throw NotInvariant<K>(w);
    m.set_column(c, *x);
  }
  return m;
}

// Matrix of the quotient transformation on N/M (M <= N both A-invariant),
// in the basis induced by extending M's canonical basis through N.
template <class K>
Matrix<K> quotient_map(const Matrix<K>& a, const Subspace<K>& m, const Subspace<K>& n) {
  assert(n.contains(m));
  // coset representatives: columns of N's basis independent from M
  std::vector<Matrix<K>> reps;
  Subspace<K> acc = m;
  for (const auto& b : n.basis())
    if (acc.insert(b)) reps.push_back(b);
  const int q = static_cast<int>(reps.size());
  // solve [M | reps] x = A*rep and keep the rep coordinates
  Matrix<K> basis = m.basis_matrix();
  for (const auto& r : reps) basis = Matrix<K>::hcat(basis, r);
  Matrix<K> out(q, q);
  for (int c = 0; c < q; ++c) {
    Matrix<K> w = a * reps[c];
    if (!n.contains(w)) throw NotInvariant<K>(w);
    std::vector<int> pivots;
    Matrix<K> red = rref(Matrix<K>::hcat(basis, w), &pivots);
    // basis columns are independent, so pivots are exactly 0..dim-1
    for (int k = 0; k < q; ++k) out(k, c) = red(m.dim() + k, basis.cols());
  }
  // also require A M <= M
  for (const auto& b : m.basis()) {
    Matrix<K> w = a * b;
    if (!m.contains(w)) throw NotInvariant<K>(w);
  }
  return out;
}

}  // namespace tri
