#pragma once

#include <string>
#include <vector>

#include "chordsieve/matching.hpp"

namespace chordsieve {

enum class DeletionOrder { kIncreasing, kDecreasing };

struct Skeleton {
  std::vector<Chord> chords;   // survivors, sorted by low endpoint
  std::vector<Chord> removed;  // in deletion order
};

// Repeatedly deletes a chord that crosses no surviving chord and whose two
// endpoints are neighbours (cyclically) among the points still covered.
// Candidates are taken by low endpoint in the given order.
Skeleton reduce_to_skeleton(const Matching& matching,
                            DeletionOrder order = DeletionOrder::kIncreasing);

// Crossing type of a matching with at most three crossings.
//   OneCrossing : c = 1, skeleton of 2 chords
//   T(k)        : c = 2, skeleton of k chords (k - 4 separating chords for k >= 5)
//   R(k)        : c = 3, skeleton of 3k chords invariant under rotation by 2n/3
//   Other       : c = 0 or c >= 4
struct CrossingTypeClass {
  enum class Kind { kOneCrossing, kT, kR, kOther };

  Kind kind = Kind::kOther;
  int k = 0;
  int skeleton_size = 0;

  static CrossingTypeClass one_crossing() { return {Kind::kOneCrossing, 1, 2}; }
  static CrossingTypeClass t(int k) { return {Kind::kT, k, k}; }
  static CrossingTypeClass r(int k) { return {Kind::kR, k, 3 * k}; }
  static CrossingTypeClass other(int skeleton_size) { return {Kind::kOther, 0, skeleton_size}; }

  std::string to_string() const;

  friend bool operator==(const CrossingTypeClass&, const CrossingTypeClass&) = default;
};

// Throws Error(kNotClassifiable) for three-crossing matchings whose skeleton
// is not the symmetric R pattern.
CrossingTypeClass classify(const Matching& matching);

}  // namespace chordsieve
