#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chordsieve/matching.hpp"

namespace chordsieve {

struct EnumerationOptions {
  // Only matchings with exactly this many crossings are produced.
  std::optional<int> crossings;
  // Cut branches whose partial crossing count already exceeds `crossings`.
  bool prune = true;
};

// Visits every perfect matching of 2n points once, in canonical order: the
// smallest unmatched point is matched first, partners in increasing order.
void for_each_matching(int n, const EnumerationOptions& options,
                       const std::function<void(const Matching&)>& visit);

std::vector<Matching> enumerate_matchings(int n, std::optional<int> crossings = std::nullopt,
                                          bool prune = true);

std::uint64_t count_matchings(int n, std::optional<int> crossings = std::nullopt);

// |{m in P(n,k) : rotate(m, shift) == m}|, checked matching by matching.
std::uint64_t count_fixed(int n, int k, long long shift);

// Entry j-1 holds count_fixed(n, k, j) for j = 1..2n. Computed from the
// period histogram of one pass over P(n,k). threads = 0 picks automatically
// (parallel from n = 7 on multi-core machines), 1 forces a single pass, and
// anything larger runs one task per partner of point 1.
std::vector<std::uint64_t> fixed_point_table(int n, int k, unsigned threads = 0);

}  // namespace chordsieve
