#include "chordsieve/enumerate.hpp"

#include <map>
#include <set>

#include "gtest/gtest.h"

#include "chordsieve/counts.hpp"
#include "oracles.hpp"

namespace chordsieve {
namespace {

oracle::Pairs ToPairs(const Matching& m) {
  oracle::Pairs out;
  for (const Chord& c : m.chords()) out.emplace_back(c.low, c.high);
  return out;
}

TEST(Enumerate, MatchesNaiveGenerator) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= max_crossings(n); ++k) {
      std::set<oracle::Pairs> expected;
      for (const auto& p : oracle::MatchingsWithCrossings(n, k)) expected.insert(p);
      std::set<oracle::Pairs> got;
      for (const Matching& m : enumerate_matchings(n, k)) {
        ASSERT_TRUE(got.insert(ToPairs(m)).second) << "duplicate at n=" << n;
      }
      EXPECT_EQ(got, expected) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Enumerate, TotalIsDoubleFactorial) {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= max_crossings(n); ++k) total += count_matchings(n, k);
    EXPECT_EQ(total, count_matchings(n));
    EXPECT_EQ(mpz_class(std::to_string(total)), double_factorial(2 * n - 1));
  }
}

TEST(Enumerate, NoncrossingIsCatalan) {
  const std::uint64_t catalan_numbers[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_matchings(n, 0), catalan_numbers[n]);
}

TEST(Enumerate, PrunedEqualsUnpruned) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 3; ++k) {
      EXPECT_EQ(enumerate_matchings(n, k, true), enumerate_matchings(n, k, false))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(Enumerate, SmallCounts) {
  const std::uint64_t table[][3] = {{6, 3, 1},         {28, 28, 20},     {120, 180, 195},
                                    {495, 990, 1430},  {2002, 5005, 9009}};
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(count_matchings(n, k), table[n - 3][k - 1]);
  }
  EXPECT_EQ(count_matchings(2, 3), 0u);
}

TEST(Enumerate, CanonicalOrder) {
  const auto all = enumerate_matchings(4);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LE(all[i - 1].partners()[0], all[i].partners()[0]);
  }
  EXPECT_EQ(all.size(), 105u);
}

TEST(Enumerate, FixedCountExamples) {
  EXPECT_EQ(count_fixed(6, 1, 6), 15u);
  EXPECT_EQ(count_fixed(7, 1, 7), 0u);
  EXPECT_EQ(count_fixed(6, 3, 4), 8u);
  EXPECT_EQ(count_fixed(5, 2, 5), 20u);
  EXPECT_EQ(count_fixed(7, 1, 14), 2002u);
}

TEST(Enumerate, TableAgreesWithDirectCount) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const auto table = fixed_point_table(n, k);
      ASSERT_EQ(table.size(), static_cast<std::size_t>(2 * n));
      for (int j = 1; j <= 2 * n; ++j) {
        EXPECT_EQ(table[j - 1], count_fixed(n, k, j)) << n << "," << k << "," << j;
      }
    }
  }
}

TEST(Enumerate, ParallelTableMatchesSerial) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(fixed_point_table(n, k, 4), fixed_point_table(n, k, 1));
  }
}

TEST(Enumerate, FixedCountByOracle) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const auto all = oracle::MatchingsWithCrossings(n, k);
      for (int j = 1; j <= 2 * n; ++j) {
        std::uint64_t fixed = 0;
        for (const auto& p : all) fixed += oracle::Rotate(p, j, 2 * n) == p;
        EXPECT_EQ(count_fixed(n, k, j), fixed);
      }
    }
  }
}

TEST(Enumerate, RejectsBadN) { EXPECT_THROW(count_matchings(0), Error); }

}  // namespace
}  // namespace chordsieve
