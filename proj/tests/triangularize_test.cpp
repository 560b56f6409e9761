#include <gtest/gtest.h>

#include <variant>

#include "tri/engine.hpp"
#include "tri/testkit.hpp"

namespace tri {
namespace {

using Q = Rational;
using H = Quaternion;

Matrix<Q> unit3(int r, int c) { return Matrix<Q>::unit(3, r, c); }
Matrix<Q> unit2(int r, int c) { return Matrix<Q>::unit(2, r, c); }

Subspace<Q> line(int n, int k) {
  return Subspace<Q>::span(n, {Matrix<Q>::identity(n).column(k)});
}

TEST(Levitzki, StrictlyUpperTriple) {
  std::vector<Matrix<Q>> gens{unit3(0, 1), unit3(0, 2), unit3(1, 2)};
  Verdict<Q> v = levitzki_chain(3, gens);
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain(gens, *v.chain).ok);
  EXPECT_EQ(v.chain->spaces[1], line(3, 0));
}

TEST(Levitzki, MatrixUnitsRefuted) {
  std::vector<Matrix<Q>> gens{unit2(0, 1), unit2(1, 0)};
  Verdict<Q> v = levitzki_chain(2, gens);
  ASSERT_FALSE(v.triangularizable());
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->kind, WitnessKind::NonNilpotentIdealElement);
  EXPECT_EQ(v.witness->elements.front(), unit2(0, 0));
  EXPECT_EQ(v.witness->word, "g1*g2");
  EXPECT_TRUE(recheck_witness(*v.witness));
}

TEST(Levitzki, QuaternionNilpotentPair) {
  // iE12, jE23: the closure adds kE13 and stops (other products vanish)
  Matrix<H> a(3, 3), b(3, 3);
  a(0, 1) = H::unit_i();
  b(1, 2) = H::unit_j();
  ClosureResult<H> cl = semigroup_closure<H>({a, b}, 100);
  EXPECT_TRUE(cl.complete);
  ASSERT_EQ(cl.elements.size(), 3u);
  Matrix<H> k13(3, 3);
  k13(0, 2) = H::unit_k();
  EXPECT_EQ(cl.elements[2], k13);

  Verdict<H> v = levitzki_chain<H>(3, {a, b});
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain<H>({a, b}, *v.chain).ok);
}

TEST(Kolchin, TransvectionPair) {
  std::vector<Matrix<Q>> gens{Matrix<Q>::identity(3) + unit3(0, 1),
                              Matrix<Q>::identity(3) + unit3(1, 2)};
  Verdict<Q> v = kolchin_chain(3, gens);
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain(gens, *v.chain).ok);
  EXPECT_EQ(v.chain->spaces[1], line(3, 0));
}

TEST(Kolchin, IdentityGivesStandardFlag) {
  Verdict<Q> v = kolchin_chain<Q>(2, {Matrix<Q>::identity(2)});
  ASSERT_TRUE(v.triangularizable());
  EXPECT_EQ(v.chain->spaces, Chain<Q>::standard_flag(2).spaces);
}

TEST(Kolchin, RejectsNonUnipotentGenerator) {
  Verdict<Q> v = kolchin_chain<Q>(2, {Matrix<Q>::scalar(2, rat(2))});
  ASSERT_FALSE(v.triangularizable());
  EXPECT_EQ(v.witness->kind, WitnessKind::NonSingletonSpectrum);
  EXPECT_EQ(v.witness->word, "g1");
}

TEST(Kolchin, ConjugatedHiddenFlag) {
  testkit::InstanceRecipe r{testkit::InstanceKind::Unipotent, 4, 1234, 2};
  auto inst = testkit::gen_conjugated_flag_family<Q>(r);
  ASSERT_TRUE(verify_chain(inst.generators, inst.certificate).ok);
  Verdict<Q> v = kolchin_chain(4, inst.generators);
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain(inst.generators, *v.chain).ok);
}

TEST(Kaplansky, ConstantDiagonalUppers) {
  Matrix<Q> g1 = Matrix<Q>::scalar(3, rat(2)) + unit3(0, 1);
  Matrix<Q> g2 = Matrix<Q>::scalar(3, rat(3)) + unit3(0, 1) + unit3(0, 2) + unit3(1, 2);
  std::vector<Matrix<Q>> gens{g1, g2};
  Verdict<Q> v = kaplansky_chain(3, gens, 64);
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain(gens, *v.chain).ok);
}

TEST(Kaplansky, MatrixUnitsRefutedBySpectrum) {
  std::vector<Matrix<Q>> gens{unit2(0, 1), unit2(1, 0)};
  Verdict<Q> v = kaplansky_chain(2, gens, 64);
  ASSERT_FALSE(v.triangularizable());
  EXPECT_EQ(v.witness->kind, WitnessKind::NonSingletonSpectrum);
  EXPECT_EQ(v.witness->elements.front(), unit2(0, 0));
  EXPECT_EQ(v.witness->word, "g1*g2");
  EXPECT_TRUE(recheck_witness(*v.witness));
}

TEST(Kaplansky, QuaternionCentralScalarPlusNilpotent) {
  Matrix<H> g = Matrix<H>::scalar(2, H(rat(1, 2)));
  g(0, 1) = H::unit_i();
  Verdict<H> v = kaplansky_chain<H>(2, {g}, 64);
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain<H>({g}, *v.chain).ok);
  Subspace<H> e1 = Subspace<H>::span(2, {Matrix<H>::identity(2).column(0)});
  EXPECT_EQ(v.chain->spaces[1], e1);
}

TEST(Kaplansky, QuaternionNonCentralScalarRejected) {
  // iI + E12: scalar part i is not central
  Matrix<H> g = Matrix<H>::scalar(2, H::unit_i());
  g(0, 1) = H(1);
  Verdict<H> v = kaplansky_chain<H>(2, {g}, 64);
  ASSERT_FALSE(v.triangularizable());
  EXPECT_EQ(v.witness->kind, WitnessKind::NonCentralScalar);
  EXPECT_TRUE(recheck_witness(*v.witness));
}

TEST(Kaplansky, NormalizedGeneratorsAreUnipotent) {
  testkit::InstanceRecipe r{testkit::InstanceKind::KaplanskyField, 3, 77, 2};
  auto inst = testkit::gen_conjugated_flag_family<Q>(r);
  for (const auto& g : inst.generators) {
    auto lambda = singleton_spectrum(g);
    ASSERT_TRUE(lambda.has_value());
    if (*lambda != 0) EXPECT_TRUE(is_unipotent(g.scaled_left(rat_inv(*lambda))));
  }
}

TEST(Hyperinvariant, DiagonalEigenspace) {
  Matrix<Q> d(2, 2);
  d(0, 0) = rat(1);
  d(1, 1) = rat(2);
  auto out = hyperinvariant_subspace<Q>(2, {d});
  ASSERT_TRUE(std::holds_alternative<Subspace<Q>>(out));
  EXPECT_EQ(std::get<Subspace<Q>>(out), line(2, 0));
}

TEST(Hyperinvariant, NoncommutativePairIdealKernel) {
  auto out = hyperinvariant_subspace<Q>(2, {unit2(0, 0), unit2(0, 1)});
  ASSERT_TRUE(std::holds_alternative<Subspace<Q>>(out));
  EXPECT_EQ(std::get<Subspace<Q>>(out), line(2, 0));
}

TEST(Hyperinvariant, RotationHasNoEigenvalue) {
  Matrix<Q> rot(2, 2);
  rot(0, 1) = rat(-1);
  rot(1, 0) = rat(1);
  auto out = hyperinvariant_subspace<Q>(2, {rot});
  ASSERT_TRUE(std::holds_alternative<Witness<Q>>(out));
  EXPECT_EQ(std::get<Witness<Q>>(out).kind, WitnessKind::NoEigenvalueInField);
  EXPECT_TRUE(recheck_witness(std::get<Witness<Q>>(out)));
}

TEST(Hyperinvariant, ScalarFamilyThrows) {
  EXPECT_THROW(hyperinvariant_subspace<Q>(2, {Matrix<Q>::scalar(2, rat(3))}), FamilyIsScalar);
}

TEST(Hyperinvariant, InvariantUnderFamilyAndCommutant) {
  testkit::Rng rng(5150);
  int produced = 0;
  for (std::uint64_t seed = 0; produced < 20; ++seed) {
    testkit::InstanceRecipe r{testkit::InstanceKind::General, 3, seed, 2};
    auto inst = testkit::gen_conjugated_flag_family<Q>(r);
    auto out = hyperinvariant_subspace(3, inst.generators);
    if (!std::holds_alternative<Subspace<Q>>(out)) continue;  // scalar-free guarantee not total
    const Subspace<Q>& m = std::get<Subspace<Q>>(out);
    EXPECT_GT(m.dim(), 0);
    EXPECT_LT(m.dim(), 3);
    for (const auto& g : inst.generators) EXPECT_TRUE(is_invariant(g, m));
    for (const auto& c : commutant(inst.generators)) EXPECT_TRUE(is_invariant(c, m));
    ++produced;
  }
}

TEST(TnFamily, ConstructionRejectsNonCommutingN) {
  Matrix<Q> t(2, 2);
  t(0, 0) = rat(1);
  t(1, 1) = rat(2);
  auto out = make_tn_family<Q>({{t, unit2(0, 1)}});
  ASSERT_TRUE(std::holds_alternative<Witness<Q>>(out));
  const auto& w = std::get<Witness<Q>>(out);
  EXPECT_EQ(w.kind, WitnessKind::NotInvariant);
  EXPECT_EQ(w.word, "[T1,N1]");
  EXPECT_TRUE(recheck_witness(w));
}

TEST(TnFamily, ConstructionRejectsNonNilpotentN) {
  auto out = make_tn_family<Q>({{Matrix<Q>::identity(2), Matrix<Q>::identity(2)}});
  ASSERT_TRUE(std::holds_alternative<Witness<Q>>(out));
  EXPECT_EQ(std::get<Witness<Q>>(out).kind, WitnessKind::NonNilpotentIdealElement);
}

TEST(TnFamily, EigenspaceSplitRecursion) {
  // T = diag(1,1,2), N = E12 in T's commutant
  Matrix<Q> t(3, 3);
  t(0, 0) = rat(1);
  t(1, 1) = rat(1);
  t(2, 2) = rat(2);
  auto made = make_tn_family<Q>({{t, unit3(0, 1)}});
  ASSERT_TRUE(std::holds_alternative<TnFamily<Q>>(made));
  const auto& fam = std::get<TnFamily<Q>>(made);
  Verdict<Q> v = tn_triangularize(3, fam, 64);
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain(fam.sums(), *v.chain).ok);
  Subspace<Q> e12 = Subspace<Q>::span(
      3, {Matrix<Q>::identity(3).column(0), Matrix<Q>::identity(3).column(1)});
  EXPECT_EQ(v.chain->spaces[2], e12);
}

TEST(TnFamily, ScalarTsDelegateToKaplansky) {
  auto made = make_tn_family<Q>({{Matrix<Q>::identity(2), unit2(0, 1)}});
  ASSERT_TRUE(std::holds_alternative<TnFamily<Q>>(made));
  Verdict<Q> v = tn_triangularize(2, std::get<TnFamily<Q>>(made), 64);
  ASSERT_TRUE(v.triangularizable());
  EXPECT_EQ(v.chain->spaces, Chain<Q>::standard_flag(2).spaces);
}

TEST(TnFamily, FiniteModeBoundsClosure) {
  // I + E12 generates an infinite semigroup: finite mode must report the bound
  auto made = make_tn_family<Q>({{Matrix<Q>::identity(2), unit2(0, 1)}});
  Verdict<Q> v = tn_triangularize(2, std::get<TnFamily<Q>>(made), 16, /*finite=*/true);
  EXPECT_TRUE(v.bound_exceeded);
}

TEST(TnFamily, GeneratedInstancesTriangularize) {
  for (std::uint64_t seed : {3u, 14u, 159u}) {
    testkit::InstanceRecipe r{testkit::InstanceKind::TnFamilyRecipe, 3, seed, 2};
    std::vector<std::pair<Matrix<Q>, Matrix<Q>>> pairs;
    auto inst = testkit::gen_tn_family<Q>(r, &pairs);
    ASSERT_TRUE(verify_chain(inst.generators, inst.certificate).ok);
    auto made = make_tn_family(std::move(pairs));
    ASSERT_TRUE(std::holds_alternative<TnFamily<Q>>(made));
    Verdict<Q> v = tn_triangularize(3, std::get<TnFamily<Q>>(made), 64);
    ASSERT_TRUE(v.triangularizable());
    EXPECT_TRUE(verify_chain(inst.generators, *v.chain).ok);
  }
}

TEST(General, MatrixUnitsRefuted) {
  Verdict<Q> v = triangularize_general<Q>(2, {unit2(0, 1), unit2(1, 0)});
  ASSERT_FALSE(v.triangularizable());
  EXPECT_TRUE(recheck_witness(*v.witness));
}

TEST(General, ConjugatedUpperPair) {
  testkit::InstanceRecipe r{testkit::InstanceKind::General, 4, 2024, 2};
  auto inst = testkit::gen_conjugated_flag_family<Q>(r);
  Verdict<Q> v = triangularize_general(4, inst.generators);
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain(inst.generators, *v.chain).ok);
}

TEST(General, DiagonalizableSingleMatrix) {
  Matrix<Q> a(2, 2);
  a(0, 0) = rat(1);
  a(0, 1) = rat(2);
  a(1, 1) = rat(3);
  Verdict<Q> v = triangularize_general<Q>(2, {a});
  ASSERT_TRUE(v.triangularizable());
  EXPECT_TRUE(verify_chain<Q>({a}, *v.chain).ok);
  // V1 is an eigenspace line
  const Matrix<Q>& b = v.chain->spaces[1].basis().front();
  Matrix<Q> img = a * b;
  Spectrum<Q> spec = eigenvalues_in_field(a);
  bool is_eigvec = false;
  for (const auto& [lambda, mult] : spec.eigenvalues)
    if (img == b.scaled_right(lambda)) is_eigvec = true;
  EXPECT_TRUE(is_eigvec);
}

TEST(General, RotationOverGf2Refuted) {
  GfScope scope(2);
  Matrix<GfElem> swap(2, 2);
  swap(0, 1) = GfElem(1);
  swap(1, 0) = GfElem(1);
  Matrix<GfElem> e12(2, 2);
  e12(0, 1) = GfElem(1);
  // swap and E12 generate the full matrix algebra over GF(2)
  Verdict<GfElem> v = triangularize_general<GfElem>(2, {swap, e12});
  EXPECT_FALSE(v.triangularizable());
}

TEST(Irreducibility, Examples) {
  EXPECT_TRUE(irreducibility_test<Q>(2, {unit2(0, 1), unit2(1, 0)}));
  EXPECT_FALSE(irreducibility_test<Q>(2, {Matrix<Q>::identity(2)}));
  Matrix<Q> d(2, 2);
  d(0, 0) = rat(1);
  d(1, 1) = rat(2);
  EXPECT_FALSE(irreducibility_test<Q>(2, {d}));
  // the swap matrix fixes span{(1,1)}: reducible even though every
  // coordinate-vector orbit is full
  Matrix<Q> swap = unit2(0, 1) + unit2(1, 0);
  EXPECT_FALSE(irreducibility_test<Q>(2, {swap}));
}

TEST(Verdicts, ConjugationEquivariance) {
  testkit::Rng rng(606);
  for (int t = 0; t < 10; ++t) {
    testkit::InstanceRecipe r{testkit::InstanceKind::KaplanskyField, 3,
                              static_cast<std::uint64_t>(t), 2};
    auto inst = testkit::gen_conjugated_flag_family<Q>(r);
    Matrix<Q> p = testkit::random_conjugator<Q>(3, rng);
    Matrix<Q> p_inv = inverse(p);
    std::vector<Matrix<Q>> conj;
    for (const auto& g : inst.generators) conj.push_back(p * g * p_inv);
    Verdict<Q> v1 = kaplansky_chain(3, inst.generators, 64);
    Verdict<Q> v2 = kaplansky_chain(3, conj, 64);
    ASSERT_EQ(v1.triangularizable(), v2.triangularizable());
    if (v1.triangularizable()) {
      EXPECT_TRUE(verify_chain(conj, v1.chain->conjugated(p)).ok);
    }
  }
}

TEST(ChainOps, VerifyRejectsBadChain) {
  std::vector<Matrix<Q>> gens{unit2(1, 0)};
  ChainVerification check = verify_chain(gens, Chain<Q>::standard_flag(2));
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.generator, 0);
  EXPECT_EQ(check.level, 1);
}

TEST(ChainOps, WellFormedness) {
  EXPECT_TRUE(Chain<Q>::standard_flag(3).well_formed());
  Chain<Q> broken = Chain<Q>::standard_flag(3);
  broken.spaces.pop_back();
  EXPECT_FALSE(broken.well_formed());
}

}  // namespace
}  // namespace tri
