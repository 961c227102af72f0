#include "chordsieve/enumerate.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "chordsieve/error.hpp"

namespace chordsieve {
namespace {

// Backtracking over partner arrays. A new chord (i, j) from the smallest
// unmatched point i crosses exactly the earlier chords with one endpoint in
// (i, j): every matched point above i was matched to a point below i.
class Enumerator {
 public:
  Enumerator(int n, std::optional<int> crossings, bool prune)
      : size_(2 * n), limit_(crossings), prune_(prune && crossings.has_value()),
        partner_(size_, kUnmatched) {}

  // `first_partner` restricts the chord at point 0 (kUnmatched = any).
  template <class Visit>
  void run(int first_partner, Visit& visit) {
    if (limit_ && *limit_ < 0) return;
    if (first_partner == kUnmatched) {
      recurse(0, 0, visit);
      return;
    }
    partner_[0] = first_partner;
    partner_[first_partner] = 0;
    recurse(1, 0, visit);
    partner_[0] = partner_[first_partner] = kUnmatched;
  }

 private:
  template <class Visit>
  void recurse(int from, int crossings, Visit& visit) {
    int i = from;
    while (i < size_ && partner_[i] != kUnmatched) ++i;
    if (i == size_) {
      if (!limit_ || crossings == *limit_) visit(partner_);
      return;
    }
    int between = 0;
    for (int j = i + 1; j < size_; ++j) {
      if (partner_[j] != kUnmatched) {
        ++between;
        continue;
      }
      const int total = crossings + between;
      if (prune_ && total > *limit_) break;  // `between` only grows with j
      partner_[i] = j;
      partner_[j] = i;
      recurse(i + 1, total, visit);
      partner_[i] = partner_[j] = kUnmatched;
    }
  }

  int size_;
  std::optional<int> limit_;
  bool prune_;
  std::vector<int> partner_;
};

void CheckN(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
}

// Period histogram restricted to matchings whose point 0 is paired with
// `first_partner`.
std::vector<std::uint64_t> PeriodHistogram(int n, int k, int first_partner) {
  std::vector<std::uint64_t> histogram(2 * n + 1, 0);
  Enumerator enumerator(n, k, /*prune=*/true);
  auto visit = [&](const std::vector<int>& partner) {
    ++histogram[period(Matching::from_partner(partner))];
  };
  enumerator.run(first_partner, visit);
  return histogram;
}

}  // namespace

void for_each_matching(int n, const EnumerationOptions& options,
                       const std::function<void(const Matching&)>& visit) {
  CheckN(n);
  Enumerator enumerator(n, options.crossings, options.prune);
  auto adapter = [&](const std::vector<int>& partner) {
    visit(Matching::from_partner(partner));
  };
  enumerator.run(kUnmatched, adapter);
}

std::vector<Matching> enumerate_matchings(int n, std::optional<int> crossings, bool prune) {
  std::vector<Matching> out;
  for_each_matching(n, {crossings, prune}, [&](const Matching& m) { out.push_back(m); });
  return out;
}

std::uint64_t count_matchings(int n, std::optional<int> crossings) {
  CheckN(n);
  std::uint64_t count = 0;
  Enumerator enumerator(n, crossings, /*prune=*/true);
  auto visit = [&](const std::vector<int>&) { ++count; };
  enumerator.run(kUnmatched, visit);
  return count;
}

std::uint64_t count_fixed(int n, int k, long long shift) {
  std::uint64_t count = 0;
  for_each_matching(n, {k, true}, [&](const Matching& m) {
    if (is_fixed_by(m, shift)) ++count;
  });
  return count;
}

std::vector<std::uint64_t> fixed_point_table(int n, int k, unsigned threads) {
  CheckN(n);
  const int size = 2 * n;
  std::vector<std::uint64_t> histogram(size + 1, 0);
  const unsigned workers =
      threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || (threads == 0 && n < 7)) {
    histogram = PeriodHistogram(n, k, kUnmatched);
  } else {
    // One task per partner of point 0; merged in partner order.
    std::vector<std::future<std::vector<std::uint64_t>>> parts;
    for (int j = 1; j < size; ++j) {
      parts.push_back(std::async(std::launch::async, PeriodHistogram, n, k, j));
    }
    for (auto& part : parts) {
      const auto h = part.get();
      for (int d = 0; d <= size; ++d) histogram[d] += h[d];
    }
  }
  std::vector<std::uint64_t> table(size, 0);
  for (int j = 1; j <= size; ++j) {
    for (int d = 1; d <= size; ++d) {
      if (j % d == 0) table[j - 1] += histogram[d];
    }
  }
  return table;
}

}  // namespace chordsieve
