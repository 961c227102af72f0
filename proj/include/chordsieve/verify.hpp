#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordsieve/format.hpp"
#include "chordsieve/poly.hpp"

namespace chordsieve {

struct CspRow {
  int j = 0;
  int d = 1;                        // order of the root: 2n / gcd(2n, j)
  std::optional<BigInt> poly;       // f(xi^j) when it reduced to an integer
  std::uint64_t brute = 0;          // matchings fixed by rotation by j
  bool match = false;
};

struct CspReport {
  int n = 0;
  int k = 0;
  std::vector<CspRow> rows;  // j = 1..2n
  bool verdict = false;
};

// Compares csp_polynomial(n,k) at every power of a primitive 2n-th root of
// unity against brute-force fixed-point counts. Mismatches are reported in
// the rows, never thrown.
CspReport verify_csp(int n, int k);

Json to_json(const CspReport& report);
// Header line plus one line per row: n,k,j,d,poly,brute,match
std::string to_csv(const std::vector<CspReport>& reports);
std::string to_text(const CspReport& report);

}  // namespace chordsieve
