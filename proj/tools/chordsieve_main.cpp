// chordsieve: counting, CSP verification, NCC demos, lemma audits and chord
// diagram rendering from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chordsieve/audit.hpp"
#include "chordsieve/counts.hpp"
#include "chordsieve/enumerate.hpp"
#include "chordsieve/error.hpp"
#include "chordsieve/format.hpp"
#include "chordsieve/ncc.hpp"
#include "chordsieve/qanalog.hpp"
#include "chordsieve/render.hpp"
#include "chordsieve/skeleton.hpp"
#include "chordsieve/verify.hpp"

namespace cs = chordsieve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kSafeN = 12;

enum class Format { kText, kJson, kCsv };

struct Globals {
  bool json = false;
  bool csv = false;
  bool force = false;
  std::string out;

  Format format() const { return json ? Format::kJson : csv ? Format::kCsv : Format::kText; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void RequireSafe(const Globals& g, int n) {
  if (n > kSafeN && !g.force) {
    throw UsageError("n=" + std::to_string(n) + " exceeds the enumeration bound " +
                     std::to_string(kSafeN) + "; pass --force to run anyway");
  }
}

void RequireK(int k, int low) {
  if (k < low || k > 3) throw UsageError("--k must be in " + std::to_string(low) + "..3");
}

void RequireN(int n) {
  if (n < 1) throw UsageError("--n must be positive");
}

std::string Dump(const cs::Json& json) { return json.dump(2) + "\n"; }

cs::Json PairsJson(const std::vector<cs::Chord>& chords) {
  cs::Json pairs = cs::Json::array();
  for (const cs::Chord& c : chords) pairs.push_back({c.low + 1, c.high + 1});
  return pairs;
}

cs::Json LabelsJson(std::span<const int> points) {
  cs::Json labels = cs::Json::array();
  for (int p : points) labels.push_back(p + 1);
  return labels;
}

// ---- count ----

struct CountArgs {
  int n = 0;
  int k = 0;
};

int RunCount(const Globals& g, const CountArgs& a, std::string& out) {
  RequireN(a.n);
  RequireK(a.k, 0);
  const cs::BigInt formula = cs::closed_count(a.n, a.k);
  std::optional<std::uint64_t> brute;
  if (a.n <= kSafeN || g.force) brute = cs::count_matchings(a.n, a.k);
  const bool ok = !brute || formula == cs::BigInt(std::to_string(*brute));

  switch (g.format()) {
    case Format::kJson: {
      cs::Json j;
      j["n"] = a.n;
      j["k"] = a.k;
      j["formula"] = cs::big_to_json(formula);
      j["brute"] = brute ? cs::Json(*brute) : cs::Json(nullptr);
      j["ok"] = ok;
      out = Dump(j);
      break;
    }
    case Format::kCsv:
      out = "n,k,formula,brute,ok\n" + std::to_string(a.n) + "," + std::to_string(a.k) + "," +
            formula.get_str() + "," + (brute ? std::to_string(*brute) : "") + "," +
            (ok ? "true" : "false") + "\n";
      break;
    case Format::kText:
      out = "formula=" + formula.get_str() +
            " brute=" + (brute ? std::to_string(*brute) : "skipped") +
            (brute ? (ok ? " OK" : " MISMATCH") : "") + "\n";
      break;
  }
  return ok ? kExitOk : kExitFailed;
}

// ---- verify ----

struct VerifyArgs {
  int n = 0;
  int all_up_to = 0;
  std::vector<int> ks;
};

int RunVerify(const Globals& g, const VerifyArgs& a, std::string& out) {
  std::vector<int> ns;
  if (a.all_up_to > 0) {
    for (int n = 3; n <= a.all_up_to; ++n) ns.push_back(n);
  } else {
    RequireN(a.n);
    ns.push_back(a.n);
  }
  std::vector<int> ks = a.ks.empty() ? std::vector<int>{1, 2, 3} : a.ks;
  for (int k : ks) RequireK(k, 1);
  RequireSafe(g, ns.back());

  std::vector<cs::CspReport> reports;
  bool all = true;
  for (int k : ks) {
    for (int n : ns) {
      reports.push_back(cs::verify_csp(n, k));
      all = all && reports.back().verdict;
    }
  }

  switch (g.format()) {
    case Format::kJson:
      if (reports.size() == 1) {
        out = Dump(cs::to_json(reports.front()));
      } else {
        cs::Json arr = cs::Json::array();
        for (const auto& r : reports) arr.push_back(cs::to_json(r));
        out = Dump(arr);
      }
      break;
    case Format::kCsv:
      out = cs::to_csv(reports);
      break;
    case Format::kText:
      for (const auto& r : reports) out += cs::to_text(r);
      break;
  }
  return all ? kExitOk : kExitFailed;
}

// ---- ncc ----

struct NccArgs {
  int n = 0;
  std::string set;
  std::string complete;
  bool decreasing = false;
};

std::optional<cs::CrossingTypeClass> ParseTarget(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "one-crossing") return cs::CrossingTypeClass::one_crossing();
  if (text.size() >= 2 && (text[0] == 'T' || text[0] == 'R')) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(text.substr(1), &used);
      if (used != text.size() - 1 || k < 1) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw UsageError("bad --complete target '" + text + "'");
    }
    return text[0] == 'T' ? cs::CrossingTypeClass::t(k) : cs::CrossingTypeClass::r(k);
  }
  throw UsageError("--complete must be one-crossing, T<k> or R<k>");
}

std::vector<cs::Chord> Added(const cs::PartialMatching& partial, const cs::Matching& full) {
  std::vector<cs::Chord> added;
  for (const cs::Chord& c : full.chords()) {
    if (!partial.is_matched(c.low)) added.push_back(c);
  }
  return added;
}

int RunNcc(const Globals& g, const NccArgs& a, std::string& out) {
  RequireN(a.n);
  const cs::LabelSubset seeds = cs::LabelSubset::parse(a.n, a.set);
  const auto target = ParseTarget(a.complete);
  const cs::PartialMatching partial =
      cs::ncc(a.n, seeds, a.decreasing ? cs::ScanOrder::kDecreasing : cs::ScanOrder::kIncreasing);
  const std::vector<int> free = partial.unmatched();

  std::vector<cs::Matching> completions;
  if (target) {
    if (target->kind == cs::CrossingTypeClass::Kind::kOneCrossing) {
      completions.push_back(cs::complete_one_crossing(partial));
    } else {
      completions = cs::list_completions(partial, *target);
    }
  }

  if (g.format() == Format::kJson) {
    cs::Json j;
    j["n"] = a.n;
    j["set"] = LabelsJson(seeds.members());
    j["pairs"] = PairsJson(partial.chords());
    j["unmatched"] = LabelsJson(free);
    if (target) {
      j["target"] = target->to_string();
      cs::Json list = cs::Json::array();
      for (const cs::Matching& m : completions) {
        cs::Json c;
        c["added"] = PairsJson(Added(partial, m));
        c["matching"] = cs::to_text(m);
        list.push_back(std::move(c));
      }
      j["completions"] = std::move(list);
    }
    out = Dump(j);
    return kExitOk;
  }

  out = cs::to_text(partial) + "\n";
  out += "unmatched " + cs::labels_text(free) + "\n";
  for (const cs::Matching& m : completions) {
    const auto added = Added(partial, m);
    out += "completion " + cs::to_text(std::span<const cs::Chord>(added)) + "\n";
    out += "matching " + cs::to_text(m) + "\n";
  }
  if (target && target->kind != cs::CrossingTypeClass::Kind::kOneCrossing) {
    out += std::to_string(completions.size()) + " completions of type " + target->to_string() + "\n";
  }
  return kExitOk;
}

// ---- audit ----

int RunAudit(const Globals& g, int n_max, std::string& out) {
  if (n_max < 3) throw UsageError("--n-max must be at least 3");
  RequireSafe(g, n_max);
  const cs::AuditReport report = cs::lemma_audit(n_max);
  if (g.format() == Format::kJson) {
    cs::Json checks = cs::Json::array();
    for (const auto& c : report.checks) {
      cs::Json j;
      j["lemma"] = c.lemma;
      j["n"] = c.n;
      j["passed"] = c.passed;
      j["detail"] = c.detail;
      j["counterexamples"] = c.counterexamples;
      checks.push_back(std::move(j));
    }
    cs::Json j;
    j["checks"] = std::move(checks);
    j["notes"] = report.notes;
    j["passed"] = report.all_passed();
    out = Dump(j);
  } else if (g.format() == Format::kCsv) {
    out = "n,lemma,passed\n";
    for (const auto& c : report.checks) {
      out += std::to_string(c.n) + ",\"" + c.lemma + "\"," + (c.passed ? "true" : "false") + "\n";
    }
  } else {
    out = cs::to_text(report);
  }
  return report.all_passed() ? kExitOk : kExitFailed;
}

// ---- render ----

struct RenderArgs {
  std::string matching;
  int n = 0;
  std::string set;
  bool no_highlight = false;
};

int RunRender(const RenderArgs& a, std::string& out) {
  cs::RenderOptions options;
  options.highlight_crossings = !a.no_highlight;
  if (!a.matching.empty()) {
    out = cs::render_svg(cs::parse_matching(a.matching), options);
    return kExitOk;
  }
  if (a.n < 1) throw UsageError("render needs --matching or --n with --set");
  const cs::LabelSubset seeds = cs::LabelSubset::parse(a.n, a.set);
  options.marked.assign(seeds.members().begin(), seeds.members().end());
  const cs::PartialMatching partial = cs::ncc(a.n, seeds);
  if (partial.unmatched_count() == 4) {
    out = cs::render_svg(cs::complete_one_crossing(partial), options);
  } else {
    out = cs::render_svg(partial, options);
  }
  return kExitOk;
}

// ---- poly ----

int RunPoly(const Globals& g, int n, int k, std::string& out) {
  RequireN(n);
  RequireK(k, 1);
  const cs::IntPoly f = cs::csp_polynomial(n, k);
  if (g.format() == Format::kJson) {
    out = Dump(cs::to_json(f));
  } else if (g.format() == Format::kCsv) {
    out = "exponent,coefficient\n";
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
      out += std::to_string(e) + "," + f.coeffs()[e].get_str() + "\n";
    }
  } else {
    out = cs::to_text(f) + "\n";
  }
  return kExitOk;
}

// ---- fixed ----

int RunFixed(const Globals& g, int n, int k, std::string& out) {
  RequireN(n);
  RequireK(k, 1);
  RequireSafe(g, n);
  const auto table = cs::fixed_point_table(n, k);
  if (g.format() == Format::kJson) {
    cs::Json j;
    j["n"] = n;
    j["k"] = k;
    j["fixed"] = table;
    out = Dump(j);
  } else {
    std::ostringstream s;
    s << (g.format() == Format::kCsv ? "j,count\n" : "");
    for (std::size_t j = 0; j < table.size(); ++j) {
      if (g.format() == Format::kCsv) {
        s << j + 1 << ',' << table[j] << '\n';
      } else {
        s << "j=" << j + 1 << " fixed=" << table[j] << '\n';
      }
    }
    out = s.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chord matchings with few crossings: counts, cyclic sieving checks, NCC"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_flag("--force", g.force, "Allow enumeration beyond n=12");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Closed-form and brute-force |P(n,k)|");
  count->add_option("--n", count_args.n)->required();
  count->add_option("--k", count_args.k)->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the cyclic sieving phenomenon");
  auto* verify_n = verify->add_option("--n", verify_args.n);
  auto* verify_all = verify->add_option("--all-up-to", verify_args.all_up_to, "Every n from 3");
  verify_n->excludes(verify_all);
  verify->add_option("--k", verify_args.ks, "Crossing numbers (default 1,2,3)")->delimiter(',');

  NccArgs ncc_args;
  auto* ncc = app.add_subcommand("ncc", "Run the noncrossing construction");
  ncc->add_option("--n", ncc_args.n)->required();
  ncc->add_option("--set", ncc_args.set, "Seed labels, e.g. 1,2,3,9,12")->required();
  ncc->add_option("--complete", ncc_args.complete, "one-crossing, T<k> or R<k>");
  ncc->add_flag("--decreasing", ncc_args.decreasing, "Scan seeds in decreasing order");

  int audit_n_max = 0;
  auto* audit = app.add_subcommand("audit", "Check every lemma by enumeration");
  audit->add_option("--n-max", audit_n_max)->required();

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "SVG chord diagram");
  render->add_option("--matching", render_args.matching, "(a,b)(c,d)...");
  render->add_option("--n", render_args.n);
  render->add_option("--set", render_args.set);
  render->add_flag("--no-highlight", render_args.no_highlight);

  int poly_n = 0;
  int poly_k = 0;
  auto* poly = app.add_subcommand("poly", "Print f(n,k)");
  poly->add_option("--n", poly_n)->required();
  poly->add_option("--k", poly_k)->required();

  int fixed_n = 0;
  int fixed_k = 0;
  auto* fixed = app.add_subcommand("fixed", "Matchings fixed by each rotation");
  fixed->add_option("--n", fixed_n)->required();
  fixed->add_option("--k", fixed_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string out;
  int status = kExitOk;
  try {
    if (g.json && g.csv) throw UsageError("--json and --csv are mutually exclusive");
    if (count->parsed()) status = RunCount(g, count_args, out);
    else if (verify->parsed()) status = RunVerify(g, verify_args, out);
    else if (ncc->parsed()) status = RunNcc(g, ncc_args, out);
    else if (audit->parsed()) status = RunAudit(g, audit_n_max, out);
    else if (render->parsed()) status = RunRender(render_args, out);
    else if (poly->parsed()) status = RunPoly(g, poly_n, poly_k, out);
    else if (fixed->parsed()) status = RunFixed(g, fixed_n, fixed_k, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (g.out.empty()) {
    std::cout << out;
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return kExitUsage;
    }
    file << out;
  }
  return status;
}
