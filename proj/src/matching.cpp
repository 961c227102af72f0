#include "chordsieve/matching.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "chordsieve/error.hpp"

namespace chordsieve {
namespace {

// Shared validation for perfect and partial matchings.
void ValidatePartner(const std::vector<int>& partner, bool allow_unmatched) {
  if (partner.empty() || partner.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "matching needs a positive even number of points, got " +
                    std::to_string(partner.size()));
  }
  const int size = static_cast<int>(partner.size());
  for (int i = 0; i < size; ++i) {
    const int p = partner[i];
    if (p == kUnmatched) {
      if (allow_unmatched) continue;
      throw MatchingError(ErrorCode::kMissingPoint, i + 1,
                          "point " + std::to_string(i + 1) + " is unmatched");
    }
    if (p < 0 || p >= size) {
      throw MatchingError(ErrorCode::kOutOfRange, i + 1,
                          "point " + std::to_string(i + 1) +
                              " has partner outside 1.." + std::to_string(size));
    }
    if (p == i || partner[p] != i) {
      throw MatchingError(ErrorCode::kDuplicatePoint, p + 1,
                          "point " + std::to_string(p + 1) +
                              " is not paired consistently");
    }
  }
}

std::vector<Chord> ChordsOf(std::span<const int> partner) {
  std::vector<Chord> chords;
  for (int i = 0; i < static_cast<int>(partner.size()); ++i) {
    if (partner[i] > i) chords.push_back({i, partner[i]});
  }
  return chords;
}

}  // namespace

bool chords_cross(const Chord& x, const Chord& y) noexcept {
  const int a = std::min(x.low, x.high), b = std::max(x.low, x.high);
  const int c = std::min(y.low, y.high), d = std::max(y.low, y.high);
  const bool c_inside = a < c && c < b;
  const bool d_inside = a < d && d < b;
  return c_inside != d_inside && c != a && c != b && d != a && d != b;
}

Matching Matching::from_partner(std::vector<int> partner) {
  ValidatePartner(partner, /*allow_unmatched=*/false);
  return Matching(std::move(partner));
}

std::vector<Chord> Matching::chords() const { return ChordsOf(partner_); }

Matching make_matching(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  }
  const int size = 2 * n;
  std::vector<int> partner(size, kUnmatched);
  auto claim = [&](int label) {
    if (label < 1 || label > size) {
      throw MatchingError(ErrorCode::kOutOfRange, label,
                          "label " + std::to_string(label) + " outside 1.." +
                              std::to_string(size));
    }
    if (partner[label - 1] != kUnmatched) {
      throw MatchingError(ErrorCode::kDuplicatePoint, label,
                          "label " + std::to_string(label) + " used twice");
    }
  };
  for (const auto& [a, b] : pairs) {
    claim(a);
    partner[a - 1] = size;  // placeholder so (x,x) is caught below
    claim(b);
    partner[a - 1] = b - 1;
    partner[b - 1] = a - 1;
  }
  for (int i = 0; i < size; ++i) {
    if (partner[i] == kUnmatched) {
      throw MatchingError(ErrorCode::kMissingPoint, i + 1,
                          "label " + std::to_string(i + 1) + " not covered");
    }
  }
  return Matching::from_partner(std::move(partner));
}

Matching make_matching(int n, std::initializer_list<std::pair<int, int>> pairs) {
  return make_matching(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

PartialMatching PartialMatching::from_partner(std::vector<int> partner) {
  ValidatePartner(partner, /*allow_unmatched=*/true);
  return PartialMatching(std::move(partner));
}

PartialMatching PartialMatching::empty(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  return PartialMatching(std::vector<int>(2 * n, kUnmatched));
}

PartialMatching::PartialMatching(const Matching& matching)
    : partner_(matching.partners().begin(), matching.partners().end()) {}

std::vector<Chord> PartialMatching::chords() const { return ChordsOf(partner_); }

std::vector<int> PartialMatching::unmatched() const {
  std::vector<int> points;
  for (int i = 0; i < size(); ++i) {
    if (partner_[i] == kUnmatched) points.push_back(i);
  }
  return points;
}

int PartialMatching::unmatched_count() const {
  return static_cast<int>(std::count(partner_.begin(), partner_.end(), kUnmatched));
}

Matching PartialMatching::completed_with(std::span<const Chord> extra) const {
  std::vector<int> partner = partner_;
  for (const Chord& c : extra) {
    for (int p : {c.low, c.high}) {
      if (p < 0 || p >= size()) {
        throw MatchingError(ErrorCode::kOutOfRange, p + 1, "completion point out of range");
      }
      if (partner[p] != kUnmatched) {
        throw MatchingError(ErrorCode::kDuplicatePoint, p + 1,
                            "completion reuses point " + std::to_string(p + 1));
      }
    }
    if (c.low == c.high) {
      throw MatchingError(ErrorCode::kDuplicatePoint, c.low + 1, "degenerate chord");
    }
    partner[c.low] = c.high;
    partner[c.high] = c.low;
  }
  return Matching::from_partner(std::move(partner));
}

LabelSubset::LabelSubset(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= 2 * n) {
      throw MatchingError(ErrorCode::kOutOfRange, members_[i] + 1,
                          "subset label " + std::to_string(members_[i] + 1) +
                              " outside 1.." + std::to_string(2 * n));
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw MatchingError(ErrorCode::kDuplicatePoint, members_[i] + 1,
                          "subset label " + std::to_string(members_[i] + 1) + " repeated");
    }
  }
}

LabelSubset LabelSubset::parse(int n, std::string_view text) {
  std::vector<int> members;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int label = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), label);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParse, "bad label '" + std::string(token) + "'");
    }
    members.push_back(label - 1);
    pos = end + 1;
  }
  return LabelSubset(n, std::move(members));
}

bool LabelSubset::contains(int point) const {
  return std::binary_search(members_.begin(), members_.end(), point);
}

LabelSubset LabelSubset::shifted(long long shift) const {
  std::vector<int> moved;
  moved.reserve(members_.size());
  for (int x : members_) moved.push_back(reduce_mod(x + shift, 2 * n_));
  return LabelSubset(n_, std::move(moved));
}

Matching rotate(const Matching& matching, long long shift) {
  const int size = matching.size();
  const int s = reduce_mod(shift, size);
  std::vector<int> partner(size);
  for (int i = 0; i < size; ++i) {
    partner[(i + s) % size] = (matching.partner(i) + s) % size;
  }
  return Matching(std::move(partner));
}

bool is_fixed_by(const Matching& matching, long long shift) {
  const int size = matching.size();
  const int s = reduce_mod(shift, size);
  for (int i = 0; i < size; ++i) {
    if (matching.partner((i + s) % size) != (matching.partner(i) + s) % size) return false;
  }
  return true;
}

int crossing_number(const Matching& matching) {
  const std::vector<Chord> chords = matching.chords();
  int count = 0;
  for (std::size_t x = 0; x < chords.size(); ++x) {
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      // chords[x].low < chords[y].low
      if (chords[y].low < chords[x].high && chords[x].high < chords[y].high) ++count;
    }
  }
  return count;
}

int period(const Matching& matching) {
  const int size = matching.size();
  for (int d = 1; d <= size; ++d) {
    if (size % d == 0 && is_fixed_by(matching, d)) return d;
  }
  return size;  // unreachable: rotation by 2n is the identity
}

}  // namespace chordsieve
