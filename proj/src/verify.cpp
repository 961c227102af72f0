#include "chordsieve/verify.hpp"

#include <sstream>

#include "chordsieve/enumerate.hpp"
#include "chordsieve/qanalog.hpp"

namespace chordsieve {

CspReport verify_csp(int n, int k) {
  CspReport report;
  report.n = n;
  report.k = k;
  const int order = 2 * n;
  const IntPoly f = csp_polynomial(n, k);
  const std::vector<std::uint64_t> brute = fixed_point_table(n, k);

  report.verdict = true;
  for (int j = 1; j <= order; ++j) {
    CspRow row;
    row.j = j;
    RootOfUnityValue value = eval_at_unity(f, order, j);
    row.d = value.modulus_d;
    row.poly = std::move(value.as_integer);
    row.brute = brute[j - 1];
    row.match = row.poly.has_value() && *row.poly == BigInt(std::to_string(row.brute));
    report.verdict = report.verdict && row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json to_json(const CspReport& report) {
  Json rows = Json::array();
  for (const CspRow& row : report.rows) {
    Json r;
    r["j"] = row.j;
    r["d"] = row.d;
    r["poly"] = row.poly ? big_to_json(*row.poly) : Json(nullptr);
    r["brute"] = row.brute;
    r["match"] = row.match;
    rows.push_back(std::move(r));
  }
  Json out;
  out["n"] = report.n;
  out["k"] = report.k;
  out["rows"] = std::move(rows);
  out["verdict"] = report.verdict;
  return out;
}

std::string to_csv(const std::vector<CspReport>& reports) {
  std::ostringstream out;
  out << "n,k,j,d,poly,brute,match\n";
  for (const CspReport& report : reports) {
    for (const CspRow& row : report.rows) {
      out << report.n << ',' << report.k << ',' << row.j << ',' << row.d << ','
          << (row.poly ? row.poly->get_str() : std::string()) << ',' << row.brute << ','
          << (row.match ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string to_text(const CspReport& report) {
  std::ostringstream out;
  out << "n=" << report.n << " k=" << report.k << '\n';
  out << "   j    d          poly         brute\n";
  for (const CspRow& row : report.rows) {
    std::string poly = row.poly ? row.poly->get_str() : "?";
    out.width(4);
    out << row.j << ' ';
    out.width(4);
    out << row.d << ' ';
    out.width(13);
    out << poly << ' ';
    out.width(13);
    out << row.brute << (row.match ? "" : "  MISMATCH") << '\n';
  }
  out << "verdict: " << (report.verdict ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace chordsieve
