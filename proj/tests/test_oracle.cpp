#include <gtest/gtest.h>

#include "equichar/error.hpp"
#include "equichar/oracle.hpp"

using namespace equichar;

namespace {

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

SuperellipticCurve quintic() { return SuperellipticCurve(2, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}); }
SuperellipticCurve trigonal_quartic() { return SuperellipticCurve(3, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}); }

}  // namespace

TEST(Superelliptic, CurveInvariants) {
  const auto q = quintic();
  EXPECT_EQ(q.genus(), 2);
  EXPECT_EQ(q.infinity_exponent(), 1);
  EXPECT_EQ(q.infinity_ramification_index(), 2);

  const auto t = trigonal_quartic();
  EXPECT_EQ(t.exponent_sum(), 4);
  EXPECT_EQ(t.infinity_exponent(), 2);
  EXPECT_EQ(t.genus(), 3);

  const SuperellipticCurve mixed(4, {{2, 2}, {0, 1}, {1, 1}});
  EXPECT_EQ(mixed.branches().front().x, 0);  // sorted
  EXPECT_EQ(mixed.ramification_index(2), 2);
  EXPECT_EQ(mixed.infinity_exponent(), 0);
  EXPECT_EQ(mixed.genus(), 1);  // 2g - 2 = -8 + 3 + 3 + 2
  EXPECT_EQ(mixed.describe(), "y^4 = (x) (x-1) (x-2)^2");
}

TEST(Superelliptic, RejectsBadCurves) {
  try {
    SuperellipticCurve(4, {{0, 2}, {1, 2}});
    FAIL() << "disconnected curve accepted";
  } catch (const InvalidData& e) {
    EXPECT_NE(std::string(e.what()).find("disconnected"), std::string::npos);
  }
  EXPECT_THROW(SuperellipticCurve(1, {{0, 1}}), InvalidData);
  EXPECT_THROW(SuperellipticCurve(3, {{0, 1}, {0, 2}}), InvalidData);
  EXPECT_THROW(SuperellipticCurve(3, {{0, 3}}), InvalidData);
  EXPECT_THROW(SuperellipticCurve(3, {{0, 0}, {1, 1}}), InvalidData);
}

TEST(Superelliptic, BuildCoverMatchesCurve) {
  const CoverData t = build_cover(trigonal_quartic());
  ASSERT_EQ(t.orbits.size(), 5u);
  EXPECT_EQ(t.orbits.back().id, "inf");
  EXPECT_EQ(t.orbits.front().id, "x=0");
  EXPECT_EQ(t.orbits.back().order, 3);
  EXPECT_EQ(total_genus(t), 3);

  const CoverData m = build_cover(SuperellipticCurve(4, {{0, 1}, {1, 1}, {2, 2}}));
  ASSERT_EQ(m.orbits.size(), 3u);  // infinity unramified
  EXPECT_EQ(m.orbits[2].generator, 2);  // sigma^2
  EXPECT_EQ(m.orbits[2].order, 2);
  EXPECT_EQ(m.orbits[2].rotation_exponent, 1);
  EXPECT_EQ(m.orbits[0].generator, 1);
}

TEST(Superelliptic, PinnedSectionCounts) {
  // dx/y and x dx/y are both odd
  EXPECT_EQ(holomorphic_sections(quintic(), 1), (std::vector<std::int64_t>{0, 2}));
  const auto q = compare_with_cw(quintic(), 1);
  EXPECT_TRUE(q.match());
  EXPECT_EQ(q.cw, ints({-1, 2}));
  EXPECT_EQ(q.expected, (std::vector<std::int64_t>{-1, 2}));

  const auto t = compare_with_cw(trigonal_quartic(), 1);
  EXPECT_TRUE(t.match());
  EXPECT_EQ(t.cw, ints({-1, 2, 1}));
  EXPECT_EQ(t.genus, 3);

  // quadratic differentials on a genus 2 curve: 1, x, x^2 times dx^2/y^2
  EXPECT_EQ(holomorphic_sections(quintic(), 2), (std::vector<std::int64_t>{3, 0}));
}

TEST(Superelliptic, ComparisonPreconditions) {
  EXPECT_THROW(compare_with_cw(quintic(), 0), InvalidData);
  const SuperellipticCurve elliptic(2, {{0, 1}, {1, 1}, {2, 1}});
  EXPECT_EQ(elliptic.genus(), 1);
  EXPECT_TRUE(compare_with_cw(elliptic, 1).match());
  EXPECT_THROW(compare_with_cw(elliptic, 2), InvalidData);
}

TEST(Superelliptic, EnumerationCountsMultisets) {
  // n = 2: {1}, {1,1}; n = 3: {1}, {2}, {1,1}, {1,2}, {2,2}
  EXPECT_EQ(enumerate_curves(3, 2).size(), 7u);
  for (const auto& c : enumerate_curves(4, 3)) {
    for (std::size_t j = 0; j < c.branches().size(); ++j) EXPECT_EQ(c.branches()[j].x, static_cast<std::int64_t>(j + 1));
  }
}

TEST(SuperellipticProperty, SmallSuiteAgreesWithChevalleyWeil) {
  int compared = 0;
  for (const auto& curve : enumerate_curves(6, 4)) {
    for (int t = 1; t <= 3; ++t) {
      if (t >= 2 && curve.genus() < 2) continue;
      const auto r = compare_with_cw(curve, t);
      ++compared;
      EXPECT_TRUE(r.match()) << curve.describe() << " t=" << t;
      std::int64_t total = 0;
      for (auto s : r.sections) total += s;
      EXPECT_EQ(total, t == 1 ? r.genus : (2 * t - 1) * (r.genus - 1)) << curve.describe();
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(SuperellipticProperty, FlippedConventionIsDetected) {
  // conjugate eigenspaces of H^0(K) differ, so the flipped filing disagrees
  const auto flipped = compare_with_cw(trigonal_quartic(), 1, EigenConvention::Pushforward);
  EXPECT_FALSE(flipped.match());
  EXPECT_EQ(flipped.sections, (std::vector<std::int64_t>{0, 1, 2}));
  // a double cover cannot tell the two apart
  EXPECT_TRUE(compare_with_cw(quintic(), 1, EigenConvention::Pushforward).match());
}
