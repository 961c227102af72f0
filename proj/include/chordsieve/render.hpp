#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordsieve/matching.hpp"

namespace chordsieve {

struct RenderOptions {
  bool highlight_crossings = true;
  std::vector<int> marked;  // 0-based points drawn with a ring (e.g. seeds)
  int size_px = 400;
};

// Chord diagram as SVG. Points 1..2n sit clockwise on a circle starting at
// the top; chords are straight segments, crossing ones drawn in red. The
// canonical pair text is stored in <title>. Output is byte-stable.
std::string render_svg(const PartialMatching& matching, const RenderOptions& options = {});
std::string render_svg(const Matching& matching, const RenderOptions& options = {});

// Pair list recovered from the <title> of a rendered diagram.
std::vector<std::pair<int, int>> pairs_from_svg(std::string_view svg);

}  // namespace chordsieve
