#include "chordsieve/skeleton.hpp"

#include <algorithm>

#include "chordsieve/error.hpp"
#include "chordsieve/format.hpp"

namespace chordsieve {

Skeleton reduce_to_skeleton(const Matching& matching, DeletionOrder order) {
  Skeleton result;
  std::vector<Chord> live = matching.chords();
  // Removing a chord that crosses nothing never changes who crosses whom.
  std::vector<bool> crossed(live.size(), false);
  for (std::size_t x = 0; x < live.size(); ++x) {
    for (std::size_t y = x + 1; y < live.size(); ++y) {
      if (chords_cross(live[x], live[y])) crossed[x] = crossed[y] = true;
    }
  }

  const int size = matching.size();
  std::vector<bool> covered(size, true);
  auto neighbours = [&](const Chord& c) {
    // Adjacent iff one of the two arcs between the endpoints is empty.
    bool inner_empty = true;
    for (int p = c.low + 1; p < c.high && inner_empty; ++p) inner_empty = !covered[p];
    if (inner_empty) return true;
    for (int p = c.high + 1; p < size + c.low; ++p) {
      if (covered[p % size]) return false;
    }
    return true;
  };

  for (;;) {
    std::ptrdiff_t pick = -1;
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(live.size());
    for (std::ptrdiff_t step = 0; step < count; ++step) {
      const std::ptrdiff_t idx = order == DeletionOrder::kIncreasing ? step : count - 1 - step;
      if (!crossed[idx] && neighbours(live[idx])) {
        pick = idx;
        break;
      }
    }
    if (pick < 0) break;
    const Chord gone = live[pick];
    covered[gone.low] = covered[gone.high] = false;
    result.removed.push_back(gone);
    live.erase(live.begin() + pick);
    crossed.erase(crossed.begin() + pick);
  }
  result.chords = std::move(live);
  return result;
}

std::string CrossingTypeClass::to_string() const {
  switch (kind) {
    case Kind::kOneCrossing: return "OneCrossing";
    case Kind::kT: return "T(" + std::to_string(k) + ")";
    case Kind::kR: return "R(" + std::to_string(k) + ")";
    case Kind::kOther: return "Other";
  }
  return "Other";
}

CrossingTypeClass classify(const Matching& matching) {
  const int crossings = crossing_number(matching);
  const Skeleton skeleton = reduce_to_skeleton(matching);
  const int kept = static_cast<int>(skeleton.chords.size());
  switch (crossings) {
    case 1: return CrossingTypeClass::one_crossing();
    case 2: return CrossingTypeClass::t(kept);
    case 3: break;
    default: return CrossingTypeClass::other(kept);
  }
  const int size = matching.size();
  if (size % 3 == 0 && kept % 3 == 0) {
    const int third = size / 3;
    std::vector<Chord> turned;
    for (const Chord& c : skeleton.chords) {
      const int a = (c.low + third) % size, b = (c.high + third) % size;
      turned.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(turned.begin(), turned.end());
    if (turned == skeleton.chords) return CrossingTypeClass::r(kept / 3);
  }
  throw Error(ErrorCode::kNotClassifiable,
              "three-crossing matching " + to_text(matching) +
                  " has no symmetric skeleton");
}

}  // namespace chordsieve
