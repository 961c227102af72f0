#pragma once

#include <vector>

#include "chordsieve/matching.hpp"
#include "chordsieve/skeleton.hpp"

namespace chordsieve {

enum class ScanOrder { kIncreasing, kDecreasing };

// Noncrossing construction. Rounds use offsets t = 1, 3, 5, ...; in each
// round every still-unmatched seed i (scanned in `order`) is matched with
// i + t mod 2n when that point is neither a seed nor already matched.
// Produces |seeds| noncrossing chords and leaves 2n - 2|seeds| points free.
//
// Throws SubsetTooLarge when |seeds| > n, and Stalled when n consecutive
// rounds (every odd offset) match nothing while seeds remain.
PartialMatching ncc(int n, const LabelSubset& seeds,
                    ScanOrder order = ScanOrder::kIncreasing);

// Pairs the four free points a < b < c < d as (a,c)(b,d).
// Throws WrongUnmatchedCount unless exactly four points are free.
Matching complete_one_crossing(const PartialMatching& partial);

// ncc followed by complete_one_crossing; |seeds| must be n - 2.
Matching one_crossing_from_subset(int n, const LabelSubset& seeds);

// Inverse of one_crossing_from_subset. The two crossing chords cut the
// circle into four arcs; each other chord lies inside one arc and is
// represented by its endpoint met first when walking the arc clockwise.
// Throws NotOneCrossing unless the matching has exactly one crossing.
LabelSubset subset_from_one_crossing(const Matching& matching);

// Every way of pairing the free points of `partial` whose result classifies
// as `target` (and, for R(k), is fixed by rotation by 2n/3). Exhaustive over
// all pairings of the free points, filtered by classify().
// Throws ArityMismatch when the free points cannot form the target.
std::vector<Matching> list_completions(const PartialMatching& partial,
                                       const CrossingTypeClass& target);

struct SymmetricSubsets {
  std::vector<LabelSubset> subsets;
  // Set when no subset of the requested size is closed under the shift.
  bool indivisible = false;
};

// All subsets of {0..2n-1} of the given size closed under i -> i + shift.
// `shift` must divide 2n (InvalidShift otherwise). Orbits have length
// 2n/shift, so there are C(shift, size*shift/2n) such subsets, generated
// from orbit representatives 0..shift-1 in lexicographic order.
SymmetricSubsets symmetric_subsets(int n, int size, int shift);

}  // namespace chordsieve
