#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chordsieve/matching.hpp"
#include "chordsieve/poly.hpp"

namespace chordsieve {

using Json = nlohmann::ordered_json;

// Canonical chord text: `(a,b)(c,d)...` with 1-based labels, a < b in each
// pair, pairs sorted by first label.
std::string to_text(std::span<const Chord> chords);
std::string to_text(const Matching& matching);
std::string to_text(const PartialMatching& matching);

// Comma-separated 1-based labels in increasing order.
std::string to_text(const LabelSubset& subset);
std::string labels_text(std::span<const int> points);

// `c0 + c1*q + c2*q^2 + ...`, zero terms omitted, "0" for the zero polynomial.
std::string to_text(const IntPoly& poly);
IntPoly parse_poly(std::string_view text);

// Parses `(a,b)(c,d)...` into 1-based pairs; whitespace is ignored.
std::vector<std::pair<int, int>> parse_pairs(std::string_view text);
// n is the number of pairs.
Matching parse_matching(std::string_view text);

// {"n": <int>, "pairs": [[a,b],...]}
Json to_json(const Matching& matching);
Matching matching_from_json(const Json& json);

// {"coeffs": ["<decimal>", ...]}
Json to_json(const IntPoly& poly);
IntPoly poly_from_json(const Json& json);

// Small integers as JSON numbers, larger ones as decimal strings.
Json big_to_json(const BigInt& value);

}  // namespace chordsieve
