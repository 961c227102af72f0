#include "chordsieve/matching.hpp"

#include <set>

#include "gtest/gtest.h"

#include "chordsieve/enumerate.hpp"
#include "chordsieve/error.hpp"
#include "chordsieve/format.hpp"
#include "oracles.hpp"

namespace chordsieve {
namespace {

oracle::Pairs ToPairs(const Matching& m) {
  oracle::Pairs out;
  for (const Chord& c : m.chords()) out.emplace_back(c.low, c.high);
  return out;
}

Matching FromPairs(int n, const oracle::Pairs& pairs) {
  std::vector<std::pair<int, int>> one_based;
  for (auto [a, b] : pairs) one_based.emplace_back(a + 1, b + 1);
  return make_matching(n, one_based);
}

const char kRunningExample[] = "(1,4)(2,3)(5,11)(6,7)(8,12)(9,10)(13,14)";

TEST(Matching, RejectsDuplicatePoint) {
  try {
    make_matching(2, {{1, 2}, {2, 3}});
    FAIL();
  } catch (const MatchingError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePoint);
    EXPECT_EQ(e.point(), 2);
  }
}

TEST(Matching, RejectsMissingPoint) {
  // Three pairs claim n=3 but label 6 never appears.
  try {
    make_matching(3, {{1, 2}, {3, 4}, {5, 5}});
    FAIL();
  } catch (const MatchingError& e) {
    EXPECT_TRUE(e.code() == ErrorCode::kDuplicatePoint || e.code() == ErrorCode::kMissingPoint);
  }
  try {
    make_matching(3, {{1, 2}, {3, 4}});
    FAIL();
  } catch (const MatchingError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingPoint);
    EXPECT_EQ(e.point(), 5);
  }
}

TEST(Matching, RejectsOutOfRange) {
  try {
    make_matching(2, {{1, 2}, {3, 5}});
    FAIL();
  } catch (const MatchingError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    EXPECT_EQ(e.point(), 5);
  }
  EXPECT_THROW(make_matching(2, {{0, 1}, {2, 3}}), MatchingError);
}

TEST(Matching, RotationExample) {
  const Matching tau = parse_matching(kRunningExample);
  EXPECT_EQ(crossing_number(tau), 1);
  EXPECT_EQ(to_text(rotate(tau, 1)), "(1,14)(2,5)(3,4)(6,12)(7,8)(9,13)(10,11)");
  EXPECT_EQ(rotate(tau, 0), tau);
  EXPECT_EQ(period(tau), 14);
}

TEST(Matching, PeriodSmall) {
  EXPECT_EQ(period(parse_matching("(1,4)(2,3)")), 2);
  EXPECT_EQ(period(parse_matching("(1,4)(2,5)(3,6)")), 1);
  EXPECT_EQ(period(parse_matching("(1,2)(3,4)")), 2);
}

TEST(Matching, CrossingAgreesWithGeometry) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pairs : oracle::AllMatchings(n)) {
      ASSERT_EQ(crossing_number(FromPairs(n, pairs)), oracle::GeometricCrossings(pairs, 2 * n));
    }
  }
}

TEST(Matching, ChordsCrossSymmetric) {
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = 0; c < 8; ++c) {
        for (int d = c + 1; d < 8; ++d) {
          const Chord x{a, b}, y{c, d};
          EXPECT_EQ(chords_cross(x, y), oracle::GeometricCross({a, b}, {c, d}, 8));
        }
      }
    }
  }
}

TEST(Matching, ActionLaws) {
  for (int n = 1; n <= 5; ++n) {
    const int size = 2 * n;
    for (const Matching& m : enumerate_matchings(n)) {
      EXPECT_EQ(rotate(m, 0), m);
      EXPECT_EQ(rotate(m, size), m);
      for (int i = 0; i <= size; ++i) {
        const Matching mi = rotate(m, i);
        ASSERT_EQ(ToPairs(mi), oracle::Rotate(ToPairs(m), i, size));
        for (int j = 0; j <= size; ++j) {
          ASSERT_EQ(rotate(mi, j), rotate(m, i + j));
        }
      }
    }
  }
}

TEST(Matching, NegativeShift) {
  const Matching tau = parse_matching(kRunningExample);
  EXPECT_EQ(rotate(rotate(tau, -3), 3), tau);
  EXPECT_EQ(rotate(tau, -1), rotate(tau, 13));
}

TEST(Matching, CrossingEquivariance) {
  for (int n = 1; n <= 5; ++n) {
    for (const Matching& m : enumerate_matchings(n)) {
      const int c = crossing_number(m);
      for (int j = 0; j < 2 * n; ++j) ASSERT_EQ(crossing_number(rotate(m, j)), c);
    }
  }
}

TEST(Matching, PeriodDividesOrder) {
  for (int n = 1; n <= 5; ++n) {
    const int size = 2 * n;
    for (const Matching& m : enumerate_matchings(n)) {
      const int p = period(m);
      ASSERT_EQ(size % p, 0);
      for (int j = 1; j <= size; ++j) {
        ASSERT_EQ(is_fixed_by(m, j), j % p == 0);
        ASSERT_EQ(is_fixed_by(m, j), rotate(m, j) == m);
      }
    }
  }
}

TEST(Matching, MaxCrossings) {
  EXPECT_EQ(max_crossings(1), 0);
  EXPECT_EQ(max_crossings(3), 3);
  for (int n = 1; n <= 6; ++n) {
    int best = 0;
    for (const Matching& m : enumerate_matchings(n)) best = std::max(best, crossing_number(m));
    EXPECT_EQ(best, max_crossings(n));
  }
}

TEST(Matching, OneCrossingPeriods) {
  for (int n = 2; n <= 8; ++n) {
    std::set<int> allowed = {2 * n};
    if (n % 2 == 0) allowed.insert(n);
    if (n % 4 == 2) allowed.insert(n / 2);
    for (const Matching& m : enumerate_matchings(n, 1)) {
      ASSERT_TRUE(allowed.count(period(m))) << to_text(m);
    }
  }
}

TEST(Matching, CrossingFilterAboveMaximum) {
  EXPECT_EQ(count_matchings(3, 4), 0u);
  EXPECT_TRUE(enumerate_matchings(4, 7).empty());
}

TEST(PartialMatching, CompletedWith) {
  PartialMatching p = PartialMatching::empty(2);
  EXPECT_EQ(p.unmatched_count(), 4);
  const std::vector<Chord> extra{{0, 2}, {1, 3}};
  EXPECT_EQ(to_text(p.completed_with(extra)), "(1,3)(2,4)");
  const std::vector<Chord> bad{{0, 2}};
  EXPECT_THROW(p.completed_with(bad), Error);
}

TEST(LabelSubset, ParseAndShift) {
  const LabelSubset s = LabelSubset::parse(7, "12,1,2,3,9");
  EXPECT_EQ(to_text(s), "1,2,3,9,12");
  EXPECT_TRUE(s.contains(8));
  EXPECT_FALSE(s.contains(9));
  EXPECT_EQ(to_text(s.shifted(3)), "1,4,5,6,12");
  EXPECT_EQ(s.shifted(14), s);
  EXPECT_TRUE(LabelSubset::parse(3, "").empty());
}

TEST(LabelSubset, ParseErrors) {
  try {
    LabelSubset::parse(3, "1,7");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  try {
    LabelSubset::parse(3, "2,2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePoint);
  }
  try {
    LabelSubset::parse(3, "1,x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

}  // namespace
}  // namespace chordsieve
