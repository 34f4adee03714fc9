#include <gtest/gtest.h>

#include "mdsforge/construct.hpp"
#include "mdsforge/family2.hpp"
#include "oracle.hpp"

using namespace mdsforge;
using gf::Element;
using gf::Field;
using symfun::EvalSet;

namespace {

std::vector<Element> ints(const Field& f, std::initializer_list<int> xs) {
  std::vector<Element> out;
  for (int x : xs) out.push_back(f.integer(x));
  return out;
}

family2::Spec gf19_spec() {
  const Field& f = Field::make(19);
  return {EvalSet(f, ints(f, {0, 1, 2, 3, 4, 5, 8, 11, 15, 16})), 4, 5, {}};
}

family2::Spec gf37_spec() {
  const Field& f = Field::make(37);
  return {construct::geom_lambda(f, f.integer(3), 18), 4, 21, {}};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UnknownId;
}

}  // namespace

TEST(Exponents, TopRowPattern) {
  EXPECT_EQ(family2::exponents(4, 4), (std::vector<long>{0, 1, 2, 4}));
  EXPECT_EQ(family2::exponents(3, 16), (std::vector<long>{0, 1, 16}));
  const Field& f = Field::make(2, 7);
  const family2::Spec s{EvalSet(f, f.elements()), 3, 16, {}};
  const auto g = family2::generator(s).generator();
  ASSERT_EQ(g.rows(), 3u);
  ASSERT_EQ(g.cols(), 128u);
  for (std::size_t j = 0; j < 128; ++j) {
    EXPECT_EQ(g(0, j), f.one());
    EXPECT_EQ(g(1, j), s.lambda[j]);
    EXPECT_EQ(g(2, j), s.lambda[j].pow(16));
  }
}

TEST(Generator, RejectsHBelowK) {
  const Field& f = Field::make(11);
  EXPECT_EQ(code_of([&] { family2::generator({EvalSet(f, ints(f, {1, 2, 3, 4, 5, 6})), 4, 3, {}}); }),
            ErrorCode::SpecViolation);
}

TEST(ParityCheck, Gf19Example) {
  const auto s = gf19_spec();
  const auto h = family2::parity_check(s);
  EXPECT_EQ(h.rows(), 6u);
  EXPECT_TRUE(mat_mul(family2::generator(s).generator(), transpose(h)).is_zero());
  EXPECT_EQ(rank(h), 6u);
}

TEST(ParityCheck, RIsOneMatchesNullSpace) {
  const Field& f = Field::make(13);
  const family2::Spec s{EvalSet(f, ints(f, {1, 2, 3, 4, 5, 6, 7, 8})), 3, 3, {}};
  const auto h = family2::parity_check(s);
  EXPECT_TRUE(same_row_space(h, null_space(family2::generator(s).generator())));
}

TEST(ParityCheck, NegativePlainBlockRejected) {
  const Field& f = Field::make(13);
  const family2::Spec s{EvalSet(f, ints(f, {1, 2, 3, 4, 5, 6})), 3, 6, {}};  // r = 4 > n-k = 3
  EXPECT_EQ(code_of([&] { family2::parity_check(s); }), ErrorCode::SpecViolation);
}

TEST(SubsetOk, HEqualsKIsSumCriterion) {
  const Field& f = Field::make(7);
  EXPECT_FALSE(family2::subset_ok(ints(f, {1, 2, 4}), 3).verdict);
  EXPECT_TRUE(family2::subset_ok(ints(f, {1, 2, 3}), 3).verdict);
}

TEST(SubsetOk, MatchesGeneralizedVandermondeMinor) {
  std::mt19937_64 rng(51);
  for (const Field* f : oracle::battery()) {
    for (int t = 0; t < 30; ++t) {
      const std::size_t k = 3 + rng() % 3;
      if (f->order() < k + 2) continue;
      const std::size_t h = k + rng() % (f->order() - k - 1);
      const auto beta = oracle::random_points(*f, k, rng);
      const bool nonsingular = !oracle::leibniz_det(oracle::power_rows(*f, beta, family2::exponents(k, h))).is_zero();
      ASSERT_EQ(family2::subset_ok(beta, h).verdict, nonsingular);
    }
  }
}

TEST(IsMds, Gf37AndGf8) {
  codes::ScanOptions cross;
  cross.cross_check = true;
  EXPECT_TRUE(family2::is_mds(gf37_spec(), cross).verdict);
  const Field& f8 = Field::make(2, 3);
  const family2::Spec s8{EvalSet(f8, f8.elements()), 4, 4, {}};
  EXPECT_FALSE(family2::is_mds(s8, cross).verdict);
}

TEST(NonGrs, Gf128Example) {
  const Field& f = Field::make(2, 7);
  const family2::Spec s{EvalSet(f, f.elements()), 3, 16, {}};
  const auto r = family2::is_nongrs(s, {}, true);
  EXPECT_TRUE(r.verdict);
  EXPECT_GE(std::get<std::int64_t>(*r.quantity), 6);
}

TEST(NonGrs, Gf37GeometricSetIsActuallyReedSolomon) {
  // 3 has order 18 mod 37, so a^21 = a^3 on {3^i}: the generator spans RS(18,4).
  const auto s = gf37_spec();
  const auto& f = s.lambda.field();
  const auto rs = codes::rs_generator(s.lambda, 4);
  EXPECT_TRUE(same_row_space(family2::generator(s).generator(), rs.generator()));
  EXPECT_EQ(family2::generator(s).schur_square_dim(), 7u);
  EXPECT_FALSE(family2::is_nongrs(s, {}, true).verdict);
  EXPECT_EQ(f.integer(3).pow(18), f.one());
}

TEST(NonGrs, HEqualsKHasSchurDimensionExactly2k) {
  std::mt19937_64 rng(52);
  const Field& f = Field::make(101);
  int seen = 0;
  for (int t = 0; t < 50 && seen < 3; ++t) {
    const family2::Spec s{EvalSet(f, oracle::random_points(f, 10, rng)), 4, 4, {}};
    if (!family2::is_mds(s).verdict) continue;
    ++seen;
    const auto r = family2::is_nongrs(s, {}, true);
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(std::get<std::int64_t>(*r.quantity), 8);
  }
  EXPECT_GE(seen, 1);
}

TEST(NonGrs, NotMdsRejected) {
  const Field& f8 = Field::make(2, 3);
  const family2::Spec s8{EvalSet(f8, f8.elements()), 3, 3, {}};
  EXPECT_EQ(code_of([&] { family2::is_nongrs(s8); }), ErrorCode::NotMDS);
}

TEST(SelfOrthogonal, Gf19Windows) {
  const auto s = gf19_spec();
  EXPECT_EQ(family2::so_regime(s), family2::SoRegime::SmallR);
  EXPECT_TRUE(family2::so_check(s, gf::parse_poly(s.lambda.field(), "x+2")).verdict);
  const auto bad = family2::so_check(s, gf::parse_poly(s.lambda.field(), "x+1"));
  EXPECT_FALSE(bad.verdict);
  const auto printed_v = ints(s.lambda.field(), {17, 6, 9, 9, 16, 16, 4, 4, 9, 16});
  EXPECT_TRUE(family2::so_check(s, gf::parse_poly(s.lambda.field(), "x+2"), printed_v).verdict);
}

TEST(SelfOrthogonal, DegreeBound) {
  const auto s = gf19_spec();
  EXPECT_EQ(family2::so_degree_bound(s), 1);
  EXPECT_EQ(code_of([&] { family2::so_check(s, gf::parse_poly(s.lambda.field(), "x^2")); }),
            ErrorCode::DegreeTooHigh);
}

TEST(SelfOrthogonal, LargeRegimeSearchHitsAreSelfOrthogonal) {
  std::mt19937_64 rng(53);
  const Field& f = Field::make(31);
  int hits = 0;
  for (int t = 0; t < 200 && hits < 5; ++t) {
    family2::Spec s{EvalSet(f, oracle::random_points(f, 9, rng)), 3, 5, {}};  // r = 3 >= k-1
    ASSERT_EQ(family2::so_regime(s), family2::SoRegime::LargeR);
    const auto hit = family2::so_search(s, 20000);
    if (!hit) continue;
    ++hits;
    EXPECT_TRUE(family2::so_check(s, hit->f).verdict);
    s.v = hit->v;
    EXPECT_TRUE(codes::is_self_orthogonal(family2::generator(s)).verdict);
  }
  EXPECT_GE(hits, 1);
}

TEST(SelfDual, Gf8CorollaryInstance) {
  const Field& f8 = Field::make(2, 3);
  const EvalSet lam(f8, f8.elements());
  const auto r = family2::self_dual_check(lam, 4, 4);
  ASSERT_TRUE(r.verdict);
  family2::Spec s{lam, 4, 4, r.certificate};
  const auto c = family2::generator(s);
  EXPECT_TRUE(codes::is_self_dual(c).verdict);
  EXPECT_EQ(std::get<std::int64_t>(*codes::min_distance(c).quantity), 4);
}

TEST(SelfDual, ImpossibleRegimes) {
  const Field& f17 = Field::make(17);
  const EvalSet ten(f17, ints(f17, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_FALSE(family2::self_dual_check(ten, 5, 5).verdict);  // r = 2
  const Field& f11 = Field::make(11);
  const EvalSet eight(f11, ints(f11, {0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_FALSE(family2::self_dual_check(eight, 4, 6).verdict);  // r = k-1 = 3
  EXPECT_EQ(code_of([&] { family2::self_dual_check(EvalSet(f11, ints(f11, {0, 1, 2, 3, 4, 5, 6})), 3, 3); }),
            ErrorCode::BadLength);
}
