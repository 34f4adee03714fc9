#include <gtest/gtest.h>

#include <map>
#include <set>

#include "mdsforge/construct.hpp"
#include "mdsforge/family1.hpp"
#include "mdsforge/family2.hpp"
#include "oracle.hpp"

using namespace mdsforge;
using construct::ClaimStatus;
using gf::Field;

namespace {

const construct::Reproduction& cached(const std::string& id) {
  static std::map<std::string, construct::Reproduction> memo;
  auto it = memo.find(id);
  if (it == memo.end()) it = memo.emplace(id, construct::reproduce(id)).first;
  return it->second;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UnknownId;
}

bool is_nongrs_claim(const construct::Claim& c) {
  return c.name.find("non-GRS") == 0 && c.name.find("hypotheses") == std::string::npos;
}

}  // namespace

TEST(Lift, TwoToTheNineFamilyTwo) {
  const construct::LiftSpec s{2, 9, 2, 5, 11};
  EXPECT_EQ(s.t(), 4u);
  const auto lam = construct::lift_lambda(s);
  EXPECT_EQ(lam.size(), 11u);
  EXPECT_EQ(lam.field().order(), 512u);
  const family2::Spec f2{lam, 5, 6, {}};
  EXPECT_TRUE(family2::is_mds(f2).verdict);
}

TEST(Lift, PointsAreDistinctAndMonicOfDegreeT) {
  const construct::LiftSpec s{2, 17, 1, 6, 14};
  EXPECT_EQ(s.t(), 4u);
  const auto lam = construct::lift_lambda(s);
  std::set<std::uint64_t> seen(lam.words().begin(), lam.words().end());
  EXPECT_EQ(seen.size(), 14u);
  // The first lift is g = x^4: the residue of x to the fourth power.
  EXPECT_EQ(lam[0], lam.field().w().pow(4));
}

TEST(Lift, DivisibilityGate) {
  // k^2 (k^2 - 1) / 12 = 50 for k = 5: even, so p = 2 fails the hypothesis.
  EXPECT_EQ(code_of([] { construct::LiftSpec{2, 17, 1, 5, 12}.validate(); }), ErrorCode::SpecViolation);
  // Too many points for the available lifts.
  EXPECT_EQ(code_of([] { construct::LiftSpec{2, 5, 2, 5, 40}.validate(); }), ErrorCode::SpecViolation);
}

TEST(Geom, PowersAndOrderCheck) {
  const Field& f = Field::make(37);
  const auto lam = construct::geom_lambda(f, f.integer(3), 18);
  ASSERT_EQ(lam.size(), 18u);
  EXPECT_EQ(lam[0], f.integer(3));
  EXPECT_EQ(lam[17], f.one());
  EXPECT_EQ(code_of([&] { construct::geom_lambda(f, f.integer(3), 19); }), ErrorCode::NotDistinct);
  EXPECT_EQ(code_of([&] { construct::geom_lambda(f, f.integer(-1), 3); }), ErrorCode::NotDistinct);
}

TEST(Catalog, IdsAndTitles) {
  const auto& ids = construct::catalog_ids();
  EXPECT_GE(ids.size(), 19u);
  std::set<std::string> unique(ids.begin(), ids.end());
  EXPECT_EQ(unique.size(), ids.size());
  for (const auto& id : ids) EXPECT_FALSE(construct::catalog_title(id).empty());
  EXPECT_EQ(code_of([] { construct::reproduce("no-such-example"); }), ErrorCode::UnknownId);
  EXPECT_EQ(code_of([] { construct::catalog_title("no-such-example"); }), ErrorCode::UnknownId);
}

class CatalogEntry : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogEntry, EveryClaimPasses) {
  const auto& rep = cached(GetParam());
  EXPECT_EQ(rep.count(ClaimStatus::Fail), 0u);
  EXPECT_EQ(rep.count(ClaimStatus::Skipped), 0u);
  EXPECT_TRUE(rep.ok());
  for (const auto& c : rep.claims) EXPECT_EQ(c.status, ClaimStatus::Pass) << c.name << ": " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(Verified, CatalogEntry,
                         ::testing::Values("f1-gf17-k3", "f1-gf32-so", "f1-gf16-sd", "f1-gf25-sd", "f1-gf23-so",
                                           "f1-gf17-k4-sd", "f2-gf19-so", "f2-gf37-h21-ext", "f2-gf128-h16",
                                           "f2-gf128-h16-ext", "f2-gf8-sd", "f2-lift-2-9-k5", "f1-lift-2-17-k6"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s) if (c == '-') c = '_';
                           return s;
                         });

// The geometric evaluation sets {g^i} with ord(g) = n make the top row a
// power that reduces into the Vandermonde range, so those codes are RS.
class GeometricEntry : public ::testing::TestWithParam<std::string> {};

TEST_P(GeometricEntry, MdsClaimsHoldAndTheCodeIsGrs) {
  const auto& rep = cached(GetParam());
  bool saw_nongrs = false;
  for (const auto& c : rep.claims) {
    if (is_nongrs_claim(c)) {
      saw_nongrs = true;
      EXPECT_EQ(c.status, ClaimStatus::Fail) << c.detail;
      EXPECT_NE(c.detail.find("RS(n,k)"), std::string::npos) << c.detail;
    } else {
      EXPECT_NE(c.status, ClaimStatus::Fail) << c.name << ": " << c.detail;
    }
  }
  EXPECT_TRUE(saw_nongrs);
  EXPECT_FALSE(rep.ok());
}

INSTANTIATE_TEST_SUITE_P(Geometric, GeometricEntry,
                         ::testing::Values("f2-gf37-h21", "f2-geom-gf37-k7", "f2-geom-gf41-k8", "f2-geom-gf53-k11",
                                           "f2-geom-gf61-k13", "f2-geom-gf73-k16", "f2-geom-gf89-k20"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s) if (c == '-') c = '_';
                           return s;
                         });

TEST(Catalog, LargeTableRowsSkipOnlyTheFullScan) {
  for (const char* id : {"f2-geom-gf61-k13", "f2-geom-gf73-k16", "f2-geom-gf89-k20"}) {
    const auto& rep = cached(id);
    EXPECT_EQ(rep.count(ClaimStatus::Skipped), 2u) << id;
    for (const auto& c : rep.claims) {
      if (c.status != ClaimStatus::Skipped) continue;
      const bool explained = c.detail.find("subset budget") != std::string::npos ||
                             c.detail.find("follows from the MDS scan") != std::string::npos;
      EXPECT_TRUE(explained) << c.detail;
    }
  }
}

TEST(Catalog, SchurDimensionOfGeometricRowsIsTwoKMinusOne) {
  const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::size_t, std::size_t>> rows{
      {37, 3, 18, 7}, {41, 2, 20, 8}, {53, 4, 26, 11}};
  for (const auto& [p, g, n, k] : rows) {
    const Field& f = Field::make(p);
    // Every row uses r = n, so h = k - 1 + n.
    const family2::Spec row{construct::geom_lambda(f, f.integer(std::int64_t(g)), n), k, k - 1 + n, {}};
    EXPECT_EQ(family2::generator(row).schur_square_dim(), 2 * k - 1);
  }
}
