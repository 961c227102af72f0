#include "chordsieve/ncc.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "chordsieve/error.hpp"
#include "chordsieve/format.hpp"

namespace chordsieve {

PartialMatching ncc(int n, const LabelSubset& seeds, ScanOrder order) {
  if (seeds.n() != n) {
    throw Error(ErrorCode::kInvalidArgument, "subset belongs to n=" + std::to_string(seeds.n()));
  }
  if (seeds.size() > n) {
    throw Error(ErrorCode::kSubsetTooLarge,
                std::to_string(seeds.size()) + " seeds exceed n=" + std::to_string(n));
  }
  const int size = 2 * n;
  std::vector<int> partner(size, kUnmatched);
  std::vector<int> pending(seeds.members().begin(), seeds.members().end());
  if (order == ScanOrder::kDecreasing) std::reverse(pending.begin(), pending.end());

  int idle_rounds = 0;
  for (long long offset = 1; !pending.empty(); offset += 2) {
    bool progress = false;
    for (int seed : pending) {
      const int target = reduce_mod(seed + offset, size);
      if (seeds.contains(target) || partner[target] != kUnmatched) continue;
      partner[seed] = target;
      partner[target] = seed;
      progress = true;
    }
    std::erase_if(pending, [&](int seed) { return partner[seed] != kUnmatched; });
    idle_rounds = progress ? 0 : idle_rounds + 1;
    if (idle_rounds >= n && !pending.empty()) {
      throw Error(ErrorCode::kStalled, "seeds " + labels_text(pending) +
                                           " cannot be matched in ncc(" + std::to_string(n) +
                                           ", {" + to_text(seeds) + "})");
    }
  }
  return PartialMatching::from_partner(std::move(partner));
}

Matching complete_one_crossing(const PartialMatching& partial) {
  const std::vector<int> free = partial.unmatched();
  if (free.size() != 4) {
    throw Error(ErrorCode::kWrongUnmatchedCount,
                "expected 4 unmatched points, found " + std::to_string(free.size()));
  }
  const Chord extra[] = {{free[0], free[2]}, {free[1], free[3]}};
  return partial.completed_with(extra);
}

Matching one_crossing_from_subset(int n, const LabelSubset& seeds) {
  if (seeds.size() != n - 2) {
    throw Error(ErrorCode::kSubsetSizeMismatch,
                "need n-2=" + std::to_string(n - 2) + " seeds, got " + std::to_string(seeds.size()));
  }
  return complete_one_crossing(ncc(n, seeds));
}

LabelSubset subset_from_one_crossing(const Matching& matching) {
  const int crossings = crossing_number(matching);
  if (crossings != 1) {
    throw Error(ErrorCode::kNotOneCrossing,
                to_text(matching) + " has " + std::to_string(crossings) + " crossings");
  }
  const std::vector<Chord> chords = matching.chords();
  std::vector<bool> crossing(chords.size(), false);
  std::vector<int> boundary;
  for (std::size_t x = 0; x < chords.size(); ++x) {
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      if (chords_cross(chords[x], chords[y])) {
        crossing[x] = crossing[y] = true;
        boundary = {chords[x].low, chords[x].high, chords[y].low, chords[y].high};
      }
    }
  }
  std::sort(boundary.begin(), boundary.end());

  const int size = matching.size();
  // Steps from the start of the arc containing `point`.
  auto arc_position = [&](int point) {
    int start = boundary.back();
    for (int b : boundary) {
      if (b < point) start = b;
    }
    return reduce_mod(point - start, size);
  };
  std::vector<int> picked;
  for (std::size_t x = 0; x < chords.size(); ++x) {
    if (crossing[x]) continue;
    const Chord& c = chords[x];
    picked.push_back(arc_position(c.low) < arc_position(c.high) ? c.low : c.high);
  }
  return LabelSubset(matching.n(), std::move(picked));
}

namespace {

// Calls `visit` with every perfect pairing of `points` (sorted ascending),
// smallest free point first, partners in increasing order.
void ForEachPairing(std::vector<int>& points, std::vector<Chord>& chosen,
                    const std::function<void(const std::vector<Chord>&)>& visit) {
  if (points.empty()) {
    visit(chosen);
    return;
  }
  const int first = points.front();
  for (std::size_t i = 1; i < points.size(); ++i) {
    const int other = points[i];
    std::vector<int> rest;
    rest.reserve(points.size() - 2);
    for (std::size_t j = 1; j < points.size(); ++j) {
      if (j != i) rest.push_back(points[j]);
    }
    chosen.push_back({first, other});
    ForEachPairing(rest, chosen, visit);
    chosen.pop_back();
  }
}

bool ClassifiesAs(const Matching& m, const CrossingTypeClass& target) {
  try {
    return classify(m) == target;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotClassifiable) return false;
    throw;
  }
}

}  // namespace

std::vector<Matching> list_completions(const PartialMatching& partial,
                                       const CrossingTypeClass& target) {
  std::vector<int> free = partial.unmatched();
  const int count = static_cast<int>(free.size());
  const int size = partial.size();
  auto mismatch = [&](const std::string& why) {
    return Error(ErrorCode::kArityMismatch, std::to_string(count) + " unmatched points cannot form " +
                                                target.to_string() + ": " + why);
  };
  using Kind = CrossingTypeClass::Kind;
  switch (target.kind) {
    case Kind::kOneCrossing:
      if (count != 4) throw mismatch("need 4");
      break;
    case Kind::kT:
      if (target.k < 3 || count != 2 * target.k) throw mismatch("need 2k with k >= 3");
      break;
    case Kind::kR: {
      if (target.k < 1 || count != 6 * target.k) throw mismatch("need 6k");
      if (size % 3 != 0) throw mismatch("2n not divisible by 3");
      for (int p : free) {
        if (partial.is_matched((p + size / 3) % size)) throw mismatch("free set not 1/3-turn symmetric");
      }
      break;
    }
    case Kind::kOther:
      throw mismatch("Other is not a completion target");
  }

  std::vector<Matching> out;
  std::vector<Chord> chosen;
  ForEachPairing(free, chosen, [&](const std::vector<Chord>& extra) {
    Matching candidate = partial.completed_with(extra);
    if (!ClassifiesAs(candidate, target)) return;
    if (target.kind == Kind::kR && !is_fixed_by(candidate, size / 3)) return;
    out.push_back(std::move(candidate));
  });
  return out;
}

SymmetricSubsets symmetric_subsets(int n, int size, int shift) {
  const int points = 2 * n;
  if (n < 1 || shift < 1 || points % shift != 0) {
    throw Error(ErrorCode::kInvalidShift,
                "shift " + std::to_string(shift) + " does not divide " + std::to_string(points));
  }
  SymmetricSubsets result;
  const int orbit = points / shift;
  if (size < 0 || size % orbit != 0 || size / orbit > shift) {
    result.indivisible = true;
    return result;
  }
  const int picks = size / orbit;
  // Lexicographic combinations of orbit representatives.
  std::vector<int> reps(picks);
  for (int i = 0; i < picks; ++i) reps[i] = i;
  for (;;) {
    std::vector<int> members;
    for (int r : reps) {
      for (int t = 0; t < orbit; ++t) members.push_back(r + t * shift);
    }
    result.subsets.emplace_back(n, std::move(members));
    int i = picks - 1;
    while (i >= 0 && reps[i] == shift - picks + i) --i;
    if (i < 0) break;
    ++reps[i];
    for (int j = i + 1; j < picks; ++j) reps[j] = reps[j - 1] + 1;
  }
  return result;
}

}  // namespace chordsieve
