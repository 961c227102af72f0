#include "chordsieve/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "chordsieve/error.hpp"
#include "chordsieve/format.hpp"

namespace chordsieve {
namespace {

// Three decimals, with -0.000 folded to 0.000 so output is stable.
std::string Num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  std::string out = buf;
  if (out == "-0.000") out = "0.000";
  return out;
}

struct Point {
  double x;
  double y;
};

}  // namespace

std::string render_svg(const PartialMatching& matching, const RenderOptions& options) {
  const int points = matching.size();
  const double size = options.size_px;
  const double center = size / 2;
  const double radius = size * 0.4;
  const double label_radius = radius + size * 0.05;

  auto at = [&](int i, double r) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * i / points;
    return Point{center + r * std::cos(angle), center + r * std::sin(angle)};
  };

  const std::vector<Chord> chords = matching.chords();
  std::vector<bool> crossing(chords.size(), false);
  if (options.highlight_crossings) {
    for (std::size_t a = 0; a < chords.size(); ++a) {
      for (std::size_t b = a + 1; b < chords.size(); ++b) {
        if (chords_cross(chords[a], chords[b])) crossing[a] = crossing[b] = true;
      }
    }
  }

  std::string out;
  const std::string s = std::to_string(options.size_px);
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s +
         "\" viewBox=\"0 0 " + s + " " + s + "\">\n";
  out += "<title>" + to_text(chords) + "</title>\n";
  out += "<circle cx=\"" + Num(center) + "\" cy=\"" + Num(center) + "\" r=\"" + Num(radius) +
         "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (std::size_t c = 0; c < chords.size(); ++c) {
    const Point p = at(chords[c].low, radius);
    const Point q = at(chords[c].high, radius);
    out += "<line x1=\"" + Num(p.x) + "\" y1=\"" + Num(p.y) + "\" x2=\"" + Num(q.x) +
           "\" y2=\"" + Num(q.y) + "\" stroke=\"" + (crossing[c] ? "#d62728" : "#1f2d3d") +
           "\" stroke-width=\"2\"/>\n";
  }
  for (int i = 0; i < points; ++i) {
    const Point p = at(i, radius);
    out += "<circle cx=\"" + Num(p.x) + "\" cy=\"" + Num(p.y) + "\" r=\"3\" fill=\"" +
           (matching.is_matched(i) ? "#1f2d3d" : "#ffffff") + "\" stroke=\"#1f2d3d\"/>\n";
  }
  for (int i : options.marked) {
    if (i < 0 || i >= points) continue;
    const Point p = at(i, radius);
    out += "<circle cx=\"" + Num(p.x) + "\" cy=\"" + Num(p.y) +
           "\" r=\"7\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
  }
  for (int i = 0; i < points; ++i) {
    const Point p = at(i, label_radius);
    out += "<text x=\"" + Num(p.x) + "\" y=\"" + Num(p.y) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">" +
           std::to_string(i + 1) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_svg(const Matching& matching, const RenderOptions& options) {
  return render_svg(PartialMatching(matching), options);
}

std::vector<std::pair<int, int>> pairs_from_svg(std::string_view svg) {
  const auto open = svg.find("<title>");
  const auto close = svg.find("</title>");
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw Error(ErrorCode::kParse, "no <title> in SVG");
  }
  const auto begin = open + 7;
  return parse_pairs(svg.substr(begin, close - begin));
}

}  // namespace chordsieve
