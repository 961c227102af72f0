#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace chordsieve {

// Point labels are 0-based everywhere inside the library; text and JSON
// forms (format.hpp) use the 1-based labels of circle drawings.
inline constexpr int kUnmatched = -1;

struct Chord {
  int low = 0;
  int high = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

// Two chords cross iff their endpoints interleave around the circle.
bool chords_cross(const Chord& x, const Chord& y) noexcept;

// A perfect matching of the 2n points 0..2n-1 on a circle. Immutable.
class Matching {
 public:
  // Validates that `partner` is a fixed-point-free involution.
  static Matching from_partner(std::vector<int> partner);

  int n() const noexcept { return static_cast<int>(partner_.size()) / 2; }
  int size() const noexcept { return static_cast<int>(partner_.size()); }
  int partner(int point) const { return partner_[point]; }
  std::span<const int> partners() const noexcept { return partner_; }

  // Sorted by low endpoint.
  std::vector<Chord> chords() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  explicit Matching(std::vector<int> partner) : partner_(std::move(partner)) {}

  friend Matching rotate(const Matching& matching, long long shift);

  std::vector<int> partner_;
};

// Builds a matching from 1-based pairs; throws MatchingError
// (DuplicatePoint, MissingPoint, OutOfRange) naming the offending label.
Matching make_matching(int n, std::span<const std::pair<int, int>> pairs);
Matching make_matching(int n, std::initializer_list<std::pair<int, int>> pairs);

// A matching in which some points may be left unmatched (kUnmatched).
class PartialMatching {
 public:
  static PartialMatching from_partner(std::vector<int> partner);
  static PartialMatching empty(int n);
  explicit PartialMatching(const Matching& matching);

  int n() const noexcept { return static_cast<int>(partner_.size()) / 2; }
  int size() const noexcept { return static_cast<int>(partner_.size()); }
  int partner(int point) const { return partner_[point]; }
  bool is_matched(int point) const { return partner_[point] != kUnmatched; }
  std::span<const int> partners() const noexcept { return partner_; }

  std::vector<Chord> chords() const;
  std::vector<int> unmatched() const;
  int unmatched_count() const;

  // Adds `extra` chords; the result must be a perfect matching.
  Matching completed_with(std::span<const Chord> extra) const;

  friend bool operator==(const PartialMatching&, const PartialMatching&) = default;

 private:
  explicit PartialMatching(std::vector<int> partner) : partner_(std::move(partner)) {}

  std::vector<int> partner_;
};

// A subset of the points 0..2n-1, kept sorted and duplicate-free.
class LabelSubset {
 public:
  LabelSubset(int n, std::vector<int> members);
  // Comma-separated 1-based labels, e.g. "1,2,3,9,12". Empty string is {}.
  static LabelSubset parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const int> members() const noexcept { return members_; }
  bool contains(int point) const;

  // {x + shift mod 2n : x in this}
  LabelSubset shifted(long long shift) const;

  friend bool operator==(const LabelSubset&, const LabelSubset&) = default;
  friend auto operator<=>(const LabelSubset&, const LabelSubset&) = default;

 private:
  int n_;
  std::vector<int> members_;
};

// Rotation by `shift` steps: chord (a,b) goes to (a+shift, b+shift) mod 2n.
Matching rotate(const Matching& matching, long long shift);

// True iff rotate(matching, shift) == matching, without building the copy.
bool is_fixed_by(const Matching& matching, long long shift);

int crossing_number(const Matching& matching);

// Least j >= 1 with rotate(matching, j) == matching; divides 2n.
int period(const Matching& matching);

// Largest possible crossing number for n chords.
constexpr int max_crossings(int n) { return n * (n - 1) / 2; }

// Reduces any integer into 0..modulus-1.
constexpr int reduce_mod(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

}  // namespace chordsieve
