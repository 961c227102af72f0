#include "chordsieve/audit.hpp"

#include <map>
#include <set>
#include <sstream>

#include "chordsieve/counts.hpp"
#include "chordsieve/enumerate.hpp"
#include "chordsieve/error.hpp"
#include "chordsieve/format.hpp"
#include "chordsieve/ncc.hpp"
#include "chordsieve/qanalog.hpp"
#include "chordsieve/skeleton.hpp"

namespace chordsieve {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::string Big(const BigInt& value) { return value.get_str(); }

std::string SetText(const std::set<int>& values) {
  std::string out = "{";
  for (int v : values) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

class Auditor {
 public:
  Auditor(int n, AuditReport& report) : n_(n), report_(report) {}

  void Run() {
    const auto one = enumerate_matchings(n_, 1);
    const auto two = enumerate_matchings(n_, 2);
    const auto three = enumerate_matchings(n_, 3);

    CheckCount(1, one.size());
    CheckPeriods(one);
    CheckFixed("|A_j|", 1);
    CheckBijection(one);
    CheckCount(2, two.size());
    CheckTypes(two);
    CheckTwoCrossingSum();
    CheckFixed("|B_j|", 2);
    CheckCount(3, three.size());
    CheckFixed("f(n,3) fixed", 3);
    if (n_ % 3 == 0) CheckSymmetricTypes(three);
  }

 private:
  LemmaCheck& Add(std::string lemma) {
    LemmaCheck check;
    check.lemma = std::move(lemma);
    check.n = n_;
    check.passed = true;
    report_.checks.push_back(std::move(check));
    return report_.checks.back();
  }

  static void Fail(LemmaCheck& check, const Matching& witness) {
    check.passed = false;
    if (check.counterexamples.size() < kMaxCounterexamples) {
      check.counterexamples.push_back(to_text(witness));
    }
  }

  void CheckCount(int k, std::size_t brute) {
    const std::string lemma = "|P(n," + std::to_string(k) + ")|";
    LemmaCheck& check = Add(lemma);
    const BigInt formula = closed_count(n_, k);
    check.passed = formula == BigInt(std::to_string(brute));
    check.detail = "formula=" + Big(formula) + " brute=" + std::to_string(brute);
  }

  void CheckPeriods(const std::vector<Matching>& one) {
    std::set<int> allowed = {2 * n_};
    if (n_ % 2 == 0) allowed.insert(n_);
    if (n_ % 4 == 2) allowed.insert(n_ / 2);
    std::set<int> seen;
    LemmaCheck& check = Add("d(tau)");
    for (const Matching& m : one) {
      const int p = period(m);
      seen.insert(p);
      if (!allowed.count(p)) Fail(check, m);
    }
    check.detail = "periods " + SetText(seen) + " allowed " + SetText(allowed);
  }

  void CheckFixed(const std::string& lemma, int k) {
    LemmaCheck& check = Add(lemma);
    const auto table = fixed_point_table(n_, k);
    std::ostringstream detail;
    std::ostringstream nonzero;
    std::vector<int> uncovered;
    for (int j = 1; j <= 2 * n_; ++j) {
      const auto formula = fixed_count_formula(n_, k, j);
      const BigInt brute(std::to_string(table[j - 1]));
      if (!formula) {
        uncovered.push_back(j);
      } else if (*formula != brute) {
        check.passed = false;
        detail << " j=" << j << ":formula=" << Big(*formula)
               << ",brute=" << brute.get_str();
      }
      if (table[j - 1] != 0 && j != 2 * n_) nonzero << " j=" << j << ":" << table[j - 1];
    }
    check.detail = check.passed ? "nonzero" + (nonzero.str().empty() ? " none" : nonzero.str())
                                : "mismatch" + detail.str();
    if (!uncovered.empty()) {
      std::string js;
      for (int j : uncovered) {
        js += (js.empty() ? "" : ",") + std::to_string(j) + ":" + std::to_string(table[j - 1]);
      }
      check.detail += " (no formula for j=" + js + ")";
      report_.notes.push_back("n=" + std::to_string(n_) + " k=" + std::to_string(k) +
                              ": rotations j=" + js +
                              " fix matchings although the fixed-point lemma claims none");
    }
  }

  void CheckBijection(const std::vector<Matching>& one) {
    LemmaCheck& check = Add("bijection");
    std::set<Matching> images;
    std::size_t subsets = 0;
    std::vector<int> members(n_ - 2);
    // Lexicographic (n-2)-subsets of {0..2n-1}.
    for (int i = 0; i < n_ - 2; ++i) members[i] = i;
    const int size = 2 * n_;
    const int r = n_ - 2;
    while (true) {
      ++subsets;
      const LabelSubset s(n_, members);
      const Matching m = one_crossing_from_subset(n_, s);
      if (crossing_number(m) != 1 || subset_from_one_crossing(m) != s) Fail(check, m);
      images.insert(m);
      int i = r - 1;
      while (i >= 0 && members[i] == size - r + i) --i;
      if (i < 0) break;
      ++members[i];
      for (int t = i + 1; t < r; ++t) members[t] = members[t - 1] + 1;
    }
    for (const Matching& m : one) {
      if (one_crossing_from_subset(n_, subset_from_one_crossing(m)) != m) Fail(check, m);
    }
    if (images.size() != one.size()) check.passed = false;
    check.detail = std::to_string(subsets) + " subsets, " + std::to_string(images.size()) +
                   " distinct images, |P(n,1)|=" + std::to_string(one.size());
  }

  void CheckTypes(const std::vector<Matching>& two) {
    LemmaCheck& check = Add("|T_k|");
    std::map<int, std::size_t> sizes;
    for (const Matching& m : two) {
      const CrossingTypeClass type = classify(m);
      if (type.kind != CrossingTypeClass::Kind::kT || type.k < 3 || type.k > n_) {
        Fail(check, m);
        continue;
      }
      ++sizes[type.k];
    }
    std::ostringstream detail;
    for (int k = 3; k <= n_; ++k) {
      const BigInt expected = two_crossing_type_size(n_, k);
      const std::size_t got = sizes.count(k) ? sizes[k] : 0;
      if (expected != BigInt(std::to_string(got))) check.passed = false;
      detail << (k == 3 ? "" : " ") << "T" << k << "=" << got << "/" << Big(expected);
    }
    check.detail = detail.str();
  }

  void CheckTwoCrossingSum() {
    LemmaCheck& check = Add("|P(n,2)| sum");
    const BigInt lhs = two_crossing_type_sum(n_);
    const BigInt rhs = closed_count(n_, 2);
    check.passed = lhs == rhs;
    check.detail = "sum k C(2n,n-k)=" + Big(lhs) + " closed=" + Big(rhs);
  }

  void CheckSymmetricTypes(const std::vector<Matching>& three) {
    LemmaCheck& check = Add("|F cap R_k|");
    const int third = 2 * n_ / 3;
    std::map<int, std::size_t> sizes;
    std::size_t fixed = 0;
    std::vector<Matching> members;
    for (const Matching& m : three) {
      if (!is_fixed_by(m, third)) continue;
      ++fixed;
      members.push_back(m);
      CrossingTypeClass type;
      try {
        type = classify(m);
      } catch (const Error&) {
        Fail(check, m);
        continue;
      }
      if (type.kind != CrossingTypeClass::Kind::kR) {
        Fail(check, m);
        continue;
      }
      ++sizes[type.k];
    }
    std::ostringstream detail;
    for (int k = 1; 3 * k <= n_; ++k) {
      const BigInt expected = symmetric_type_size(n_, k);
      const std::size_t got = sizes.count(k) ? sizes[k] : 0;
      if (expected != BigInt(std::to_string(got))) check.passed = false;
      detail << "R" << k << "=" << got << "/" << Big(expected) << " ";
    }
    const BigInt f = third_turn_fixed_count(n_);
    if (f != BigInt(std::to_string(fixed))) check.passed = false;
    detail << "|F|=" << fixed << "/" << Big(f);
    if (members.size() == 1) detail << " unique " << to_text(members.front());
    check.detail = detail.str();

    LemmaCheck& sum = Add("|F| sum");
    const BigInt lhs = symmetric_type_sum(n_);
    sum.passed = lhs == f;
    sum.detail = "sum |F cap R_k|=" + Big(lhs) + " closed=" + Big(f);
  }

  int n_;
  AuditReport& report_;
};

std::string SignNote(int n, int k) {
  const IntPoly f = csp_polynomial(n, k);
  for (const BigInt& c : f.coeffs()) {
    if (sgn(c) < 0) return "f(" + std::to_string(n) + "," + std::to_string(k) + ") has a negative coefficient";
  }
  return {};
}

}  // namespace

bool AuditReport::all_passed() const {
  for (const LemmaCheck& check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

AuditReport lemma_audit(int n_max) {
  if (n_max < 3) throw Error(ErrorCode::kInvalidArgument, "n-max must be at least 3");
  AuditReport report;
  for (int n = 3; n <= n_max; ++n) Auditor(n, report).Run();

  std::size_t negative = 0;
  for (int n = 3; n <= n_max; ++n) {
    for (int k = 1; k <= 3; ++k) {
      std::string note = SignNote(n, k);
      if (!note.empty()) {
        ++negative;
        report.notes.push_back(std::move(note));
      }
    }
  }
  if (negative == 0) {
    report.notes.push_back("observed: all coefficients of f(n,k), k=1..3, n=3.." +
                           std::to_string(n_max) + " are nonnegative (not asserted)");
  }
  return report;
}

std::string to_text(const AuditReport& report) {
  std::ostringstream out;
  for (const LemmaCheck& check : report.checks) {
    out << (check.passed ? "PASS" : "FAIL") << "  n=" << check.n << "  " << check.lemma << "  "
        << check.detail << '\n';
    for (const std::string& witness : check.counterexamples) out << "      " << witness << '\n';
  }
  for (const std::string& note : report.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace chordsieve
