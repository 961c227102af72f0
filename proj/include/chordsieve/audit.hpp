#pragma once

#include <string>
#include <vector>

namespace chordsieve {

struct LemmaCheck {
  std::string lemma;
  int n = 0;
  bool passed = false;
  std::string detail;
  std::vector<std::string> counterexamples;  // canonical matching text, capped
};

struct AuditReport {
  std::vector<LemmaCheck> checks;
  // Observations that are reported but not asserted (coefficient signs).
  std::vector<std::string> notes;

  bool all_passed() const;
};

// Checks every counting and fixed-point lemma against brute-force
// enumeration for n = 3..n_max. Failures carry up to a few counterexamples.
AuditReport lemma_audit(int n_max);

// One line per check: "PASS  n=4  d(tau)  periods {4,8}".
std::string to_text(const AuditReport& report);

}  // namespace chordsieve
