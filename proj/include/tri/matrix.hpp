#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "tri/scalar.hpp"

namespace tri {

struct UnsupportedRing : std::logic_error {
  explicit UnsupportedRing(const std::string& what) : std::logic_error(what) {}
};

// Dense matrix over an exact scalar ring K. Matrices act on the left of the
// right vector space of column vectors: scalars multiply vector coordinates
// on the right, so over the quaternions row elimination multiplies rows on
// the left only and column operations multiply columns on the right only.
template <class K>
class Matrix {
  using T = scalar_traits<K>;

 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, T::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T::one();
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  // Matrix unit E_{rc} (1-based indexing is not used anywhere; r, c are 0-based).
  static Matrix unit(int n, int r, int c) {
    Matrix m(n, n);
    m(r, c) = T::one();
    return m;
  }
  static Matrix scalar(int n, const K& v) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = v;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const K& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    Matrix z(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] + y.a_[i];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    Matrix z(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] - y.a_[i];
    return z;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.cols_ == y.rows_);
    Matrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int l = 0; l < x.cols_; ++l) {
        const K& xil = x(i, l);
        if (T::is_zero(xil)) continue;
        for (int j = 0; j < y.cols_; ++j) z(i, j) += xil * y(l, j);
      }
    return z;
  }
  Matrix& operator+=(const Matrix& y) { return *this = *this + y; }
  Matrix& operator-=(const Matrix& y) { return *this = *this - y; }
  Matrix& operator*=(const Matrix& y) { return *this = *this * y; }
  Matrix operator-() const {
    Matrix z(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) z.a_[i] = -a_[i];
    return z;
  }

  Matrix scaled_left(const K& c) const {  // c * A
    Matrix z(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) z.a_[i] = c * a_[i];
    return z;
  }
  Matrix scaled_right(const K& c) const {  // A * c
    Matrix z(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) z.a_[i] = a_[i] * c;
    return z;
  }

  bool is_zero() const {
    for (const K& v : a_)
      if (!T::is_zero(v)) return false;
    return true;
  }
  bool is_scalar() const {
    assert(rows_ == cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j ? !T::is_zero((*this)(i, j)) : (*this)(i, j) != (*this)(0, 0))
          return false;
    return true;
  }
  bool is_identity() const { return *this == identity(rows_); }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  // Total order for deterministic deduplication.
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i) {
      int s = T::compare(a_[i], o.a_[i]);
      if (s != 0) return s < 0;
    }
    return false;
  }

  K trace() const {
    assert(rows_ == cols_);
    K t = T::zero();
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix pow(int e) const {
    assert(rows_ == cols_);
    Matrix r = identity(rows_);
    Matrix b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      if (e > 1) b *= b;
    }
    return r;
  }

  Matrix column(int c) const {
    Matrix v(rows_, 1);
    for (int i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, c);
    return v;
  }
  void set_column(int c, const Matrix& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, c) = v(i, 0);
  }

  static Matrix hcat(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_);
    Matrix z(x.rows_, x.cols_ + y.cols_);
    for (int i = 0; i < x.rows_; ++i) {
      for (int j = 0; j < x.cols_; ++j) z(i, j) = x(i, j);
      for (int j = 0; j < y.cols_; ++j) z(i, x.cols_ + j) = y(i, j);
    }
    return z;
  }

  Matrix block(int r0, int c0, int nrows, int ncols) const {
    Matrix z(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) z(i, j) = (*this)(r0 + i, c0 + j);
    return z;
  }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
      out += i ? "; " : "";
      for (int j = 0; j < cols_; ++j) out += (j ? ", " : "") + T::str((*this)(i, j));
    }
    return out + "]";
  }

 private:
  int rows_, cols_;
  std::vector<K> a_;
};

// Row reduction with left row operations only (valid over skew fields:
// E(Ax) = (EA)x, so the solution set of Ax = 0 is preserved).
// Returns the reduced matrix; pivots/rank through out-parameters.
template <class K>
Matrix<K> rref(Matrix<K> m, std::vector<int>* pivot_cols = nullptr) {
  using T = scalar_traits<K>;
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!T::is_zero(m(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    K piv_inv = T::inv(m(r, c));
    for (int j = 0; j < cols; ++j) m(r, j) = piv_inv * m(r, j);
    for (int i = 0; i < rows; ++i) {
      if (i == r || T::is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (int j = 0; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivot_cols) *pivot_cols = pivots;
  return m;
}

template <class K>
int rank(const Matrix<K>& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

// Right null space {x : Ax = 0}, one column per free variable,
// in free-column order.
template <class K>
std::vector<Matrix<K>> kernel_columns(const Matrix<K>& m) {
  using T = scalar_traits<K>;
  std::vector<int> pivots;
  Matrix<K> r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Matrix<K>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix<K> x(m.cols(), 1);
    x(f, 0) = T::one();
    for (size_t k = 0; k < pivots.size(); ++k) x(pivots[k], 0) = -r(int(k), f);
    out.push_back(std::move(x));
  }
  return out;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  std::vector<int> pivots;
  Matrix<K> aug = rref(Matrix<K>::hcat(m, Matrix<K>::identity(n)), &pivots);
  if (static_cast<int>(pivots.size()) != n)
    throw std::invalid_argument("matrix not invertible");
  return aug.block(0, n, n, n);
}

template <class K>
bool is_nilpotent(const Matrix<K>& m) {
  assert(m.rows() == m.cols());
  return m.pow(m.rows()).is_zero();
}

template <class K>
bool is_unipotent(const Matrix<K>& m) {
  assert(m.rows() == m.cols());
  return is_nilpotent(m - Matrix<K>::identity(m.rows()));
}

}  // namespace tri
