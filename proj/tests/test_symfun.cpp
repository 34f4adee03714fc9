#include <gtest/gtest.h>

#include "mdsforge/symfun.hpp"
#include "oracle.hpp"

using namespace mdsforge;
using gf::Element;
using gf::Field;
using symfun::EvalSet;
using symfun::Partition;

namespace {

std::vector<Element> ints(const Field& f, std::initializer_list<int> xs) {
  std::vector<Element> out;
  for (int x : xs) out.push_back(f.integer(x));
  return out;
}

}  // namespace

TEST(Sigma, SmallCases) {
  const Field& f = Field::make(7);
  const auto xs = ints(f, {1, 2, 3});
  EXPECT_EQ(symfun::sigma(2, xs), f.integer(11));
  EXPECT_EQ(symfun::sigma(0, xs), f.one());
  EXPECT_EQ(symfun::sigma(4, xs), f.zero());
  EXPECT_EQ(symfun::sigma(2, xs), oracle::sigma(f, 2, xs));
}

TEST(Sigma, Gf16SelfDualSetHasZeroFirstSigma) {
  const Field& f = Field::make(2, 4);
  std::vector<Element> xs;
  for (int e : {1, 2, 4, 5, 7, 8, 10, 11, 13, 14}) xs.push_back(f.w().pow(e));
  EXPECT_TRUE(symfun::sigma(1, xs).is_zero());
}

TEST(Sigma, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(3);
  for (const Field* f : oracle::battery()) {
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 1 + rng() % std::min<std::size_t>(12, f->order());
      const auto xs = oracle::random_points(*f, n, rng);
      for (std::size_t k = 0; k <= n + 1; ++k) ASSERT_EQ(symfun::sigma(k, xs), oracle::sigma(*f, k, xs));
    }
  }
}

TEST(Complete, DefinitionAtTwoVariables) {
  const Field& f = Field::make(31);
  const Element a = f.integer(5), b = f.integer(9);
  EXPECT_EQ(symfun::complete_S(2, std::vector<Element>{a, b}), a * a + a * b + b * b);
  EXPECT_EQ(symfun::complete_S(0, std::vector<Element>{a, b}), f.one());
  EXPECT_EQ(symfun::complete_S(-1, std::vector<Element>{a, b}), f.zero());
}

TEST(Complete, WorkedExampleValues) {
  const Field& f19 = Field::make(19);
  const auto l19 = ints(f19, {0, 1, 2, 3, 4, 5, 8, 11, 15, 16});
  EXPECT_EQ(symfun::complete_S(1, l19), f19.integer(8));
  EXPECT_EQ(symfun::complete_S(2, l19), f19.integer(3));
  const Field& f23 = Field::make(23);
  const auto l23 = ints(f23, {0, 1, 2, 3, 4, 5, 6, 7, 18});
  EXPECT_EQ(symfun::complete_S(1, l23), f23.integer(0));
  EXPECT_EQ(symfun::complete_S(2, l23), f23.integer(2));
  EXPECT_EQ(symfun::complete_S(3, l23), f23.integer(5));
}

TEST(Complete, MatchesMonomialEnumeration) {
  std::mt19937_64 rng(4);
  for (const Field* f : oracle::battery()) {
    for (int t = 0; t < 8; ++t) {
      const std::size_t n = 1 + rng() % 6;
      const auto xs = oracle::random_points(*f, n, rng);
      for (long d = 0; d <= 6; ++d) ASSERT_EQ(symfun::complete_S(d, xs), oracle::complete(*f, d, xs));
    }
  }
}

TEST(Complete, LargeDegreeIsCheap) {
  const Field& f = Field::make(37);
  std::vector<Element> xs;
  for (int i = 1; i <= 13; ++i) xs.push_back(f.integer(3).pow(i));
  // S_18 of 13 variables: monomial enumeration would need C(30,12) terms.
  const auto s = symfun::complete_S(18, xs);
  // Recurrence check independent of the DP order: S_t(x_1..x_n) = S_t(x_1..x_{n-1}) + x_n S_{t-1}(x_1..x_n).
  std::vector<Element> head(xs.begin(), xs.end() - 1);
  EXPECT_EQ(s, symfun::complete_S(18, head) + xs.back() * symfun::complete_S(17, xs));
}

TEST(Newton, ResidualVanishes) {
  const Field& f7 = Field::make(7);
  const auto xs = ints(f7, {1, 2, 3});
  EXPECT_TRUE(symfun::newton_residual(1, xs).is_zero());
  EXPECT_TRUE(symfun::newton_residual(2, xs).is_zero());
  std::mt19937_64 rng(5);
  const Field& f31 = Field::make(31);
  EXPECT_TRUE(symfun::newton_residual(5, oracle::random_points(f31, 8, rng)).is_zero());
}

TEST(DualWeights, SmallAndWorkedExamples) {
  const Field& f7 = Field::make(7);
  EXPECT_EQ(EvalSet(f7, ints(f7, {0, 1})).weights(), ints(f7, {6, 1}));
  const Field& f17 = Field::make(17);
  EXPECT_EQ(EvalSet(f17, ints(f17, {3, 5, 6, 7, 10, 11, 12, 14})).weights(),
            ints(f17, {6, 10, 12, 14, 3, 5, 7, 11}));
  const Field& f32 = Field::parse("2^5:1,0,1,0,0,1");
  std::vector<Element> pts, want;
  for (int e : {1, 2, 3, 4, 5, 6, 10, 13, 17, 21, 26}) pts.push_back(f32.w().pow(e));
  for (int e : {4, 29, 1, 14, 18, 25, 11, 1, 10, 1, 6}) want.push_back(f32.w().pow(e));
  EXPECT_EQ(EvalSet(f32, pts).weights(), want);
  EXPECT_EQ(symfun::dual_weights(f32, pts), want);
}

TEST(DualWeights, SolveTheVandermondeSystem) {
  // sum_i u_i a_i^j = 0 for j < n-1 and 1 for j = n-1.
  std::mt19937_64 rng(6);
  const Field& f = Field::make(5, 2);
  const EvalSet s(f, oracle::random_points(f, 9, rng));
  for (std::size_t j = 0; j < 9; ++j) {
    Element acc = f.zero();
    for (std::size_t i = 0; i < 9; ++i) acc += s.weights()[i] * (j == 0 ? f.one() : s[i].pow(long(j)));
    EXPECT_EQ(acc, j == 8 ? f.one() : f.zero());
  }
}

TEST(EvalSetTest, RejectsDuplicates) {
  const Field& f = Field::make(7);
  EXPECT_THROW(EvalSet(f, ints(f, {1, 2, 1})), Error);
}

TEST(WeightedPowerSum, LemmaCases) {
  const Field& f = Field::make(7);
  const EvalSet s(f, ints(f, {1, 2, 3}));
  EXPECT_TRUE(symfun::weighted_power_sum(s, 1).is_zero());
  EXPECT_EQ(symfun::weighted_power_sum(s, 2), f.one());
  EXPECT_EQ(symfun::weighted_power_sum(s, 4), f.integer(4));
  EXPECT_EQ(symfun::weighted_power_sum(s, 4), symfun::complete_S(2, s.points()));
}

TEST(Gvdm, ClosedFormSmallCases) {
  const Field& f = Field::make(7);
  const Element a = f.integer(2), b = f.integer(6);
  const EvalSet two(f, {a, b});
  EXPECT_EQ(symfun::gvdm_det(two, 2), (a + b) * (b - a));
  const EvalSet s(f, ints(f, {1, 2, 3}));
  EXPECT_EQ(symfun::gvdm_det(s, 4), f.one());
  EXPECT_EQ(symfun::gvdm_det_direct(s, 4), f.one());
  EXPECT_EQ(symfun::gvdm_det(s, 2), symfun::vandermonde_det(s.points()));
}

TEST(Schur, TwoTwoPartitionForms) {
  std::mt19937_64 rng(12);
  const Field& f = Field::make(17);
  const auto xs = oracle::random_points(f, 6, rng);
  const Partition lam({2, 2});
  const auto S = [&](int t) { return symfun::complete_S(t, xs); };
  const auto s = [&](int t) { return symfun::sigma(std::size_t(t), xs); };
  EXPECT_EQ(symfun::schur_poly(lam, xs), S(2) * S(2) - S(1) * S(3));
  EXPECT_EQ(symfun::schur_poly_elementary(lam, xs), s(2) * s(2) - s(1) * s(3));
  EXPECT_EQ(symfun::schur_poly(lam, xs), symfun::schur_poly_bialternant(lam, xs));
}

TEST(Schur, ColumnOfTwosGivesGeneralizedCriterion) {
  std::mt19937_64 rng(13);
  const Field& f = Field::make(2, 5);
  const auto xs = oracle::random_points(f, 7, rng);
  for (unsigned r = 1; r <= 4; ++r) {
    const Partition lam(std::vector<unsigned>(r + 1, 2));
    const auto s = [&](std::size_t t) { return symfun::sigma(t, xs); };
    EXPECT_EQ(symfun::schur_poly(lam, xs), s(r + 1) * s(r + 1) - s(r) * s(r + 2)) << "r=" << r;
  }
}

TEST(PartitionTest, ConjugateAndTrailingZeros) {
  const Partition p({3, 1, 0, 0});
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(p.conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(p.conjugate().conjugate(), p);
  EXPECT_EQ(p.weight(), 4u);
  EXPECT_THROW(Partition({1, 2}), Error);
}
