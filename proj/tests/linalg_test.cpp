#include <gtest/gtest.h>

#include <random>

#include "tri/charpoly.hpp"
#include "tri/matrix.hpp"
#include "tri/subspace.hpp"
#include "tri/testkit.hpp"

namespace tri {
namespace {

using Q = Rational;

Matrix<Q> qmat(int n, std::initializer_list<long> entries) {
  Matrix<Q> m(n, n);
  auto it = entries.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rat(*it++);
  return m;
}

TEST(Matrix, ArithmeticAndFactories) {
  Matrix<Q> a = qmat(2, {1, 2, 3, 4});
  Matrix<Q> b = qmat(2, {0, 1, 1, 0});
  EXPECT_EQ(a * b, qmat(2, {2, 1, 4, 3}));
  EXPECT_EQ(b * a, qmat(2, {3, 4, 1, 2}));
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(Matrix<Q>::identity(2) * a, a);
  EXPECT_EQ(Matrix<Q>::unit(2, 0, 1), qmat(2, {0, 1, 0, 0}));
  EXPECT_EQ(a.trace(), rat(5));
  EXPECT_TRUE(Matrix<Q>::scalar(3, rat(2)).is_scalar());
  EXPECT_FALSE(a.is_scalar());
}

TEST(Matrix, RankKernelInverseRational) {
  Matrix<Q> a = qmat(3, {1, 2, 3, 4, 5, 6, 7, 8, 9});  // rank 2
  EXPECT_EQ(rank(a), 2);
  auto ker = kernel_columns(a);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE((a * ker[0]).is_zero());
  Matrix<Q> inv_able = qmat(2, {2, 1, 1, 1});
  EXPECT_EQ(inv_able * inverse(inv_able), Matrix<Q>::identity(2));
}

TEST(Matrix, RankKernelOverGf) {
  GfScope scope(5);
  Matrix<GfElem> a(2, 2);
  a(0, 0) = GfElem(1);
  a(0, 1) = GfElem(2);
  a(1, 0) = GfElem(3);
  a(1, 1) = GfElem(6);  // second row = 3 * first row mod 5
  EXPECT_EQ(rank(a), 1);
  auto ker = kernel_columns(a);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE((a * ker[0]).is_zero());
}

// Kernel over a skew field needs strictly one-sided elimination; the row
// [i, j] kills exactly the line through (k, 1).
TEST(Matrix, QuaternionKernel) {
  Matrix<Quaternion> a(1, 2);
  a(0, 0) = Quaternion::unit_i();
  a(0, 1) = Quaternion::unit_j();
  Subspace<Quaternion> ker = kernel(a);
  ASSERT_EQ(ker.dim(), 1);
  Matrix<Quaternion> v(2, 1);
  v(0, 0) = Quaternion::unit_k();
  v(1, 0) = Quaternion(1);
  EXPECT_TRUE(ker.contains(v));
  EXPECT_TRUE((a * v).is_zero());
}

TEST(Matrix, NilpotentAndUnipotent) {
  Matrix<Q> n = qmat(3, {0, 1, 5, 0, 0, 2, 0, 0, 0});
  EXPECT_TRUE(is_nilpotent(n));
  EXPECT_TRUE(is_unipotent(Matrix<Q>::identity(3) + n));
  EXPECT_FALSE(is_nilpotent(qmat(2, {0, 1, 1, 0})));
  EXPECT_FALSE(is_unipotent(qmat(2, {2, 0, 0, 2})));
}

TEST(Subspace, CanonicalFormIsBasisIndependent) {
  // same plane presented by two different spanning sets
  Matrix<Q> v1(3, 1), v2(3, 1), w1(3, 1), w2(3, 1);
  v1(0, 0) = rat(1); v1(1, 0) = rat(1);
  v2(1, 0) = rat(1); v2(2, 0) = rat(2);
  w1 = v1 + v2.scaled_right(rat(3));
  w2 = v2 - v1.scaled_right(rat(5, 2));
  Subspace<Q> s1 = Subspace<Q>::span(3, {v1, v2});
  Subspace<Q> s2 = Subspace<Q>::span(3, {w1, w2});
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1.dim(), 2);
  EXPECT_TRUE(s1.contains(w1));
}

TEST(Subspace, SumIntersectDimensionFormula) {
  testkit::Rng rng(99);
  for (int t = 0; t < 500; ++t) {
    int n = 2 + static_cast<int>(rng.integer(0, 3));
    int du = static_cast<int>(rng.integer(0, n));
    int dw = static_cast<int>(rng.integer(0, n));
    Subspace<Q> u(n), w(n);
    for (int i = 0; i < du; ++i) u.insert(testkit::random_matrix<Q>(n, rng).column(0));
    for (int i = 0; i < dw; ++i) w.insert(testkit::random_matrix<Q>(n, rng).column(0));
    Subspace<Q> s = subspace_sum(u, w);
    Subspace<Q> x = subspace_intersect(u, w);
    EXPECT_EQ(s.dim() + x.dim(), u.dim() + w.dim());
    for (const auto& b : x.basis()) {
      EXPECT_TRUE(u.contains(b));
      EXPECT_TRUE(w.contains(b));
    }
    for (const auto& b : u.basis()) EXPECT_TRUE(s.contains(b));
  }
}

TEST(Subspace, InvarianceAndRestriction) {
  // E12 leaves span{e1} invariant, not span{e2}
  Matrix<Q> e12 = Matrix<Q>::unit(2, 0, 1);
  Subspace<Q> l1 = Subspace<Q>::span(2, {Matrix<Q>::identity(2).column(0)});
  Subspace<Q> l2 = Subspace<Q>::span(2, {Matrix<Q>::identity(2).column(1)});
  EXPECT_TRUE(is_invariant(e12, l1));
  EXPECT_FALSE(is_invariant(e12, l2));
  Matrix<Q> r = restrict_to(e12, l1);
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(restrict_to(e12, l2), NotInvariant<Q>);
}

TEST(Subspace, ExtendToBasisInvertible) {
  Subspace<Q> s = Subspace<Q>::span(3, {qmat(3, {1, 0, 0, 1, 0, 0, 0, 0, 0}).column(0)});
  Matrix<Q> p = extend_to_basis(s);
  EXPECT_EQ(rank(p), 3);
  // first column spans s
  EXPECT_TRUE(s.contains(p.column(0)));
}

TEST(CharPoly, BerkowitzMatchesCofactorOracle) {
  testkit::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(rng.integer(0, 3));
    Matrix<Q> a = testkit::random_matrix<Q>(n, rng);
    EXPECT_EQ(char_poly(a), testkit::cofactor_char_poly(a));
  }
  GfScope scope(2);  // small characteristic, where division-based methods fail
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(rng.integer(0, 3));
    Matrix<GfElem> a = testkit::random_matrix<GfElem>(n, rng);
    EXPECT_EQ(char_poly(a), testkit::cofactor_char_poly(a));
  }
}

TEST(CharPoly, ConjugationInvariant) {
  testkit::Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng.integer(0, 2));
    Matrix<Q> a = testkit::random_matrix<Q>(n, rng);
    Matrix<Q> p = testkit::random_conjugator<Q>(n, rng);
    EXPECT_EQ(char_poly(a), char_poly(p * a * inverse(p)));
  }
}

TEST(CharPoly, SingletonSpectrum) {
  Matrix<Q> a = qmat(2, {3, 1, 0, 3});
  EXPECT_EQ(singleton_spectrum(a), rat(3));
  EXPECT_EQ(singleton_spectrum(qmat(2, {1, 0, 0, 2})), std::nullopt);
  GfScope scope(2);  // p | n case: every residue must be tried
  Matrix<GfElem> u(2, 2);
  u(0, 0) = GfElem(1);
  u(0, 1) = GfElem(1);
  u(1, 1) = GfElem(1);
  EXPECT_EQ(singleton_spectrum(u), GfElem(1));
}

TEST(CharPoly, RationalRoots) {
  // (x - 1/2)(x + 3)^2 = x^3 + 11/2 x^2 + 6x - 9/2
  Polynomial<Q> f({rat(-9, 2), rat(6), rat(11, 2), rat(1)});
  auto roots = rational_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].first, rat(-3));
  EXPECT_EQ(roots[0].second, 2);
  EXPECT_EQ(roots[1].first, rat(1, 2));
  EXPECT_EQ(roots[1].second, 1);
  // x^2 + 1 has no rational roots
  EXPECT_TRUE(rational_roots(Polynomial<Q>({rat(1), rat(0), rat(1)})).empty());
}

TEST(Quaternionic, RealificationIsAlgebraHom) {
  testkit::Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(rng.integer(0, 2));
    Matrix<Quaternion> a = testkit::random_matrix<Quaternion>(n, rng, 4);
    Matrix<Quaternion> b = testkit::random_matrix<Quaternion>(n, rng, 4);
    EXPECT_EQ(realify(a * b), realify(a) * realify(b));
    EXPECT_EQ(realify(a + b), realify(a) + realify(b));
  }
  EXPECT_EQ(realify(Matrix<Quaternion>::identity(2)), Matrix<Q>::identity(8));
}

TEST(Quaternionic, CentralSpectrum) {
  // 2I + iE12 has central spectrum {2}
  Matrix<Quaternion> a = Matrix<Quaternion>::scalar(2, Quaternion(2));
  a(0, 1) = Quaternion::unit_i();
  EXPECT_EQ(central_spectrum_quaternion(a), rat(2));
  // iI + E12 has scalar part i, which is not central
  Matrix<Quaternion> b = Matrix<Quaternion>::scalar(2, Quaternion::unit_i());
  b(0, 1) = Quaternion(1);
  EXPECT_EQ(central_spectrum_quaternion(b), std::nullopt);
  EXPECT_TRUE(has_noncentral_scalar_part(b));
  EXPECT_FALSE(has_noncentral_scalar_part(a));
  // diag(1, 2) has two spectral points, so no scalar part of either kind
  Matrix<Quaternion> c(2, 2);
  c(0, 0) = Quaternion(1);
  c(1, 1) = Quaternion(2);
  EXPECT_EQ(central_spectrum_quaternion(c), std::nullopt);
  EXPECT_FALSE(has_noncentral_scalar_part(c));
}

TEST(Subspace, QuotientMapComposition) {
  // quotient of Q^3 by span{e1}: images of e2, e3 span the quotient
  Subspace<Q> m = Subspace<Q>::span(3, {Matrix<Q>::identity(3).column(0)});
  Matrix<Q> g = qmat(3, {1, 2, 3, 0, 4, 5, 0, 6, 7});  // leaves m invariant
  ASSERT_TRUE(is_invariant(g, m));
  Matrix<Q> gbar = quotient_map(g, m, Subspace<Q>::full(3));
  EXPECT_EQ(gbar.rows(), 2);
  EXPECT_EQ(gbar, qmat(2, {4, 5, 6, 7}));
}

}  // namespace
}  // namespace tri
