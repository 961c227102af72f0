#include "chordsieve/skeleton.hpp"

#include <map>

#include "gtest/gtest.h"

#include "chordsieve/counts.hpp"
#include "chordsieve/enumerate.hpp"
#include "chordsieve/error.hpp"
#include "chordsieve/format.hpp"

namespace chordsieve {
namespace {

TEST(Skeleton, RemovesOnlyIsolatedNeighbours) {
  const Matching m = parse_matching("(1,6)(2,5)(3,4)(7,11)(8,14)(9,10)(12,13)");
  const Skeleton s = reduce_to_skeleton(m);
  EXPECT_EQ(to_text(std::span<const Chord>(s.chords)), "(7,11)(8,14)");
  EXPECT_EQ(s.removed.size(), 5u);
}

TEST(Skeleton, Confluence) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 3; ++k) {
      for (const Matching& m : enumerate_matchings(n, k)) {
        ASSERT_EQ(reduce_to_skeleton(m, DeletionOrder::kIncreasing).chords,
                  reduce_to_skeleton(m, DeletionOrder::kDecreasing).chords)
            << to_text(m);
      }
    }
  }
}

TEST(Skeleton, NoncrossingReducesToNothing) {
  for (int n = 1; n <= 7; ++n) {
    for (const Matching& m : enumerate_matchings(n, 0)) {
      ASSERT_TRUE(reduce_to_skeleton(m).chords.empty());
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(parse_matching("(1,3)(2,4)")), CrossingTypeClass::one_crossing());
  EXPECT_EQ(classify(parse_matching("(1,4)(2,5)(3,6)")), CrossingTypeClass::r(1));
  EXPECT_EQ(classify(parse_matching("(1,4)(2,3)(5,6)(7,11)(8,13)(9,10)(12,14)")),
            CrossingTypeClass::t(3));
  EXPECT_EQ(classify(parse_matching("(1,4)(2,3)(5,6)(7,9)(8,10)(11,13)(12,14)")),
            CrossingTypeClass::t(4));
  EXPECT_EQ(classify(parse_matching("(1,2)(3,4)")).kind, CrossingTypeClass::Kind::kOther);
  EXPECT_EQ(classify(parse_matching("(1,5)(2,6)(3,7)(4,8)")).kind,
            CrossingTypeClass::Kind::kOther);
  EXPECT_EQ(CrossingTypeClass::t(4).to_string(), "T(4)");
  EXPECT_EQ(CrossingTypeClass::r(2).to_string(), "R(2)");
}

TEST(Classify, AsymmetricThreeCrossingThrows) {
  const auto three = enumerate_matchings(4, 3);
  ASSERT_FALSE(three.empty());
  try {
    classify(three.front());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotClassifiable);
  }
}

TEST(Classify, TwoCrossingPartition) {
  for (int n = 3; n <= 8; ++n) {
    std::map<int, std::uint64_t> sizes;
    for (const Matching& m : enumerate_matchings(n, 2)) {
      const CrossingTypeClass t = classify(m);
      ASSERT_EQ(t.kind, CrossingTypeClass::Kind::kT);
      ASSERT_GE(t.k, 3);
      ASSERT_LE(t.k, n);
      ++sizes[t.k];
    }
    for (int k = 3; k <= n; ++k) {
      EXPECT_EQ(mpz_class(std::to_string(sizes[k])), two_crossing_type_size(n, k))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(Classify, SixPointTypeSizes) {
  std::map<int, std::uint64_t> sizes;
  for (const Matching& m : enumerate_matchings(6, 2)) ++sizes[classify(m).k];
  EXPECT_EQ(sizes[3], 660u);
  EXPECT_EQ(sizes[4], 264u);
  EXPECT_EQ(sizes[5], 60u);
  EXPECT_EQ(sizes[6], 6u);
}

TEST(Classify, SymmetricThreeCrossing) {
  for (int n : {3, 6, 9}) {
    std::map<int, std::uint64_t> sizes;
    std::uint64_t fixed = 0;
    for (const Matching& m : enumerate_matchings(n, 3)) {
      if (!is_fixed_by(m, 2 * n / 3)) continue;
      ++fixed;
      const CrossingTypeClass t = classify(m);
      ASSERT_EQ(t.kind, CrossingTypeClass::Kind::kR) << to_text(m);
      ++sizes[t.k];
    }
    EXPECT_EQ(mpz_class(std::to_string(fixed)), third_turn_fixed_count(n));
    for (int k = 1; 3 * k <= n; ++k) {
      EXPECT_EQ(mpz_class(std::to_string(sizes[k])), symmetric_type_size(n, k))
          << "n=" << n << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace chordsieve
