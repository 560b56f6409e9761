#include <gtest/gtest.h>

#include "tri/engine.hpp"
#include "tri/testkit.hpp"

namespace tri {
namespace {

using Q = Rational;

TEST(Rng, DeterministicAcrossRuns) {
  testkit::Rng a(42), b(42);
  for (int t = 0; t < 100; ++t) {
    EXPECT_EQ(a.integer(-50, 50), b.integer(-50, 50));
  }
  testkit::Rng c(42), d(43);
  bool differ = false;
  for (int t = 0; t < 20; ++t)
    if (c.integer(0, 1000000) != d.integer(0, 1000000)) differ = true;
  EXPECT_TRUE(differ);
}

TEST(Rng, RangesRespected) {
  testkit::Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    long v = rng.integer(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
    Q r = rng.rational();
    EXPECT_LE(abs(r.get_num()), 10);
    EXPECT_LE(r.get_den(), 10);
  }
}

TEST(Generators, IdenticalRecipesIdenticalInstances) {
  testkit::InstanceRecipe r{testkit::InstanceKind::KaplanskyField, 4, 99, 3};
  auto a = testkit::gen_conjugated_flag_family<Q>(r);
  auto b = testkit::gen_conjugated_flag_family<Q>(r);
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(a.conjugator, b.conjugator);
}

TEST(Generators, NilpotentRecipeYieldsNilpotents) {
  testkit::InstanceRecipe r{testkit::InstanceKind::Nilpotent, 3, 1, 2};
  auto inst = testkit::gen_conjugated_flag_family<Q>(r);
  ASSERT_EQ(inst.generators.size(), 2u);
  for (const auto& g : inst.generators) {
    EXPECT_TRUE(is_nilpotent(g));
    EXPECT_TRUE((g * g * g).is_zero());
  }
  EXPECT_TRUE(verify_chain(inst.generators, inst.certificate).ok);
}

TEST(Generators, UnipotentRecipe) {
  testkit::InstanceRecipe r{testkit::InstanceKind::Unipotent, 2, 5, 1};
  auto inst = testkit::gen_conjugated_flag_family<Q>(r);
  EXPECT_TRUE(is_unipotent(inst.generators.front()));
  EXPECT_TRUE(verify_chain(inst.generators, inst.certificate).ok);
}

TEST(Generators, KaplanskyRecipeHasSingletonSpectra) {
  testkit::InstanceRecipe r{testkit::InstanceKind::KaplanskyField, 4, 11, 2};
  auto inst = testkit::gen_conjugated_flag_family<Q>(r);
  for (const auto& g : inst.generators) EXPECT_TRUE(singleton_spectrum(g).has_value());
  EXPECT_TRUE(verify_chain(inst.generators, inst.certificate).ok);
}

TEST(Generators, KaplanskyQuaternionCentralDiagonal) {
  testkit::InstanceRecipe r{testkit::InstanceKind::KaplanskyQuaternion, 3, 17, 2};
  auto inst = testkit::gen_conjugated_flag_family<Quaternion>(r);
  for (const auto& g : inst.generators)
    EXPECT_TRUE(central_spectrum_quaternion(g).has_value());
  EXPECT_TRUE(verify_chain(inst.generators, inst.certificate).ok);
}

TEST(Generators, GfInstances) {
  GfScope scope(5);
  testkit::InstanceRecipe r{testkit::InstanceKind::Nilpotent, 3, 23, 2};
  auto inst = testkit::gen_conjugated_flag_family<GfElem>(r);
  for (const auto& g : inst.generators) EXPECT_TRUE(is_nilpotent(g));
  EXPECT_TRUE(verify_chain(inst.generators, inst.certificate).ok);
}

TEST(Generators, TnFamilyInvariantsHold) {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    testkit::InstanceRecipe r{testkit::InstanceKind::TnFamilyRecipe, 4, seed, 2};
    std::vector<std::pair<Matrix<Q>, Matrix<Q>>> pairs;
    auto inst = testkit::gen_tn_family<Q>(r, &pairs);
    ASSERT_EQ(pairs.size(), 2u);
    for (const auto& [t, n] : pairs) {
      EXPECT_TRUE(is_nilpotent(n));
      for (const auto& [t2, n2] : pairs) EXPECT_EQ(t2 * n - n * t2, Matrix<Q>::zero(4, 4));
    }
    EXPECT_TRUE(verify_chain(inst.generators, inst.certificate).ok);
    // checked constructor agrees
    EXPECT_TRUE(std::holds_alternative<TnFamily<Q>>(make_tn_family(pairs)));
  }
}

TEST(FlagOracle, SpecExamples) {
  // upper-triangular pair: invariant standard flag exists
  std::vector<std::vector<std::vector<std::uint64_t>>> upper{
      {{1, 1}, {0, 1}}, {{1, 0}, {0, 0}}};
  EXPECT_TRUE(testkit::FlagEnumerationOracle::triangularizable(2, 2, upper));
  // matrix units E12, E21: no common invariant line over GF(2)
  std::vector<std::vector<std::vector<std::uint64_t>>> units{
      {{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}};
  EXPECT_FALSE(testkit::FlagEnumerationOracle::triangularizable(2, 2, units));
  // identity alone
  std::vector<std::vector<std::vector<std::uint64_t>>> id{{{1, 0}, {0, 1}}};
  EXPECT_TRUE(testkit::FlagEnumerationOracle::triangularizable(2, 2, id));
}

TEST(FlagOracle, ThreeDimensional) {
  // strictly upper pair in GF(3)^3: standard flag is invariant
  std::vector<std::vector<std::vector<std::uint64_t>>> upper{
      {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}};
  EXPECT_TRUE(testkit::FlagEnumerationOracle::triangularizable(3, 3, upper));
  // a 3-cycle permutation matrix together with E12 acts irreducibly on GF(2)^3
  std::vector<std::vector<std::vector<std::uint64_t>>> cyc{
      {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}};
  EXPECT_FALSE(testkit::FlagEnumerationOracle::triangularizable(3, 2, cyc));
}

TEST(SpectrumOracle, SpecExamples) {
  Matrix<Q> a = Matrix<Q>::scalar(2, rat(3)) + Matrix<Q>::unit(2, 0, 1);
  EXPECT_EQ(testkit::spectrum_oracle(a), rat(3));
  Matrix<Q> d(2, 2);
  d(0, 0) = rat(1);
  d(1, 1) = rat(2);
  EXPECT_EQ(testkit::spectrum_oracle(d), std::nullopt);
  // random nilpotent has spectrum {0}
  testkit::InstanceRecipe r{testkit::InstanceKind::Nilpotent, 3, 8, 1};
  auto inst = testkit::gen_conjugated_flag_family<Q>(r);
  EXPECT_EQ(testkit::spectrum_oracle(inst.generators.front()), rat(0));
}

TEST(SpectrumOracle, AgreesWithEngineIncludingCharDividesN) {
  testkit::Rng rng(404);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng.integer(0, 3));
    Matrix<Q> a = testkit::random_matrix<Q>(n, rng, 4);
    EXPECT_EQ(singleton_spectrum(a), testkit::spectrum_oracle(a));
  }
  GfScope scope(2);  // p = 2 divides n = 2 and 4
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng.integer(0, 3));
    Matrix<GfElem> a = testkit::random_matrix<GfElem>(n, rng);
    EXPECT_EQ(singleton_spectrum(a), testkit::spectrum_oracle(a));
  }
}

TEST(Conjugators, AlwaysInvertible) {
  testkit::Rng rng(1717);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng.integer(0, 3));
    Matrix<Q> p = testkit::random_conjugator<Q>(n, rng);
    EXPECT_EQ(rank(p), n);
  }
}

}  // namespace
}  // namespace tri
