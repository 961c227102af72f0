#include "chordsieve/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "chordsieve/error.hpp"

namespace chordsieve {
namespace {

std::string Compact(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int ParseInt(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string to_text(std::span<const Chord> chords) {
  std::vector<Chord> sorted;
  for (const Chord& c : chords) sorted.push_back({std::min(c.low, c.high), std::max(c.low, c.high)});
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const Chord& c : sorted) {
    out += "(" + std::to_string(c.low + 1) + "," + std::to_string(c.high + 1) + ")";
  }
  return out;
}

std::string to_text(const Matching& matching) { return to_text(matching.chords()); }

std::string to_text(const PartialMatching& matching) { return to_text(matching.chords()); }

std::string labels_text(std::span<const int> points) {
  std::string out;
  for (int p : points) {
    if (!out.empty()) out += ",";
    out += std::to_string(p + 1);
  }
  return out;
}

std::string to_text(const LabelSubset& subset) { return labels_text(subset.members()); }

std::string to_text(const IntPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (int e = 0; e <= poly.degree(); ++e) {
    const BigInt& c = poly.coeffs()[e];
    if (c == 0) continue;
    if (out.empty()) {
      out += c.get_str();
    } else {
      out += c < 0 ? " - " : " + ";
      out += BigInt(abs(c)).get_str();
    }
    if (e == 1) out += "*q";
    if (e > 1) out += "*q^" + std::to_string(e);
  }
  return out;
}

IntPoly parse_poly(std::string_view text) {
  const std::string s = Compact(text);
  if (s == "0") return {};
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) throw Error(ErrorCode::kParse, "missing coefficient in '" + s + "'");
    BigInt c(s.substr(pos, end - pos));
    int exponent = 0;
    pos = end;
    if (s.compare(pos, 2, "*q") == 0) {
      pos += 2;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        end = ++pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        exponent = ParseInt(std::string_view(s).substr(pos, end - pos));
        pos = end;
      }
    }
    if (static_cast<int>(coeffs.size()) <= exponent) coeffs.resize(exponent + 1);
    coeffs[exponent] += sign * c;
  }
  return IntPoly(std::move(coeffs));
}

std::vector<std::pair<int, int>> parse_pairs(std::string_view text) {
  const std::string s = Compact(text);
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw Error(ErrorCode::kParse, "expected '(' in '" + s + "'");
    const std::size_t comma = s.find(',', pos);
    const std::size_t close = s.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      throw Error(ErrorCode::kParse, "malformed pair in '" + s + "'");
    }
    const std::string_view view(s);
    pairs.emplace_back(ParseInt(view.substr(pos + 1, comma - pos - 1)),
                       ParseInt(view.substr(comma + 1, close - comma - 1)));
    pos = close + 1;
  }
  return pairs;
}

Matching parse_matching(std::string_view text) {
  const auto pairs = parse_pairs(text);
  if (pairs.empty()) throw Error(ErrorCode::kParse, "no pairs given");
  return make_matching(static_cast<int>(pairs.size()), pairs);
}

Json to_json(const Matching& matching) {
  Json pairs = Json::array();
  for (const Chord& c : matching.chords()) pairs.push_back({c.low + 1, c.high + 1});
  Json out;
  out["n"] = matching.n();
  out["pairs"] = std::move(pairs);
  return out;
}

Matching matching_from_json(const Json& json) {
  try {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : json.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return make_matching(json.at("n").get<int>(), pairs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Json to_json(const IntPoly& poly) {
  Json coeffs = Json::array();
  for (const BigInt& c : poly.coeffs()) coeffs.push_back(c.get_str());
  Json out;
  out["coeffs"] = std::move(coeffs);
  return out;
}

IntPoly poly_from_json(const Json& json) {
  try {
    std::vector<BigInt> coeffs;
    for (const auto& c : json.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return IntPoly(std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Json big_to_json(const BigInt& value) {
  if (value.fits_slong_p()) return static_cast<long long>(value.get_si());
  return value.get_str();
}

}  // namespace chordsieve
