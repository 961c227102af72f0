#pragma once

#include <complex>
#include <optional>

#include "chordsieve/poly.hpp"

namespace chordsieve {

// [m]_q = 1 + q + ... + q^(m-1); [0]_q = 0.
IntPoly q_int(int m);

// Gaussian binomial via the Pascal recurrence
//   [m, r] = [m-1, r-1] + q^r [m-1, r],
// zero when r < 0 or r > m.
IntPoly q_binomial(int m, int r);

// The same polynomial as the quotient [m][m-1]...[m-r+1] / [r][r-1]...[1],
// carried out by exact division. Independent second construction.
IntPoly q_binomial_product(int m, int r);

// Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e. Memoized, thread-safe.
IntPoly cyclotomic(int d);

// f(n,k) for k = 1, 2, 3:
//   f(n,1) = [2n, n-2]
//   f(n,2) = [n+3] [2n, n-3] / [2]
//   f(n,3) = [n+5, 2] [2n, n-4] / [3] + [2n, n-3]
// Divisions are exact; InexactDivision would mean the expression is not a
// polynomial.
IntPoly csp_polynomial(int n, int k);

// Exact value of a polynomial at a primitive d-th root of unity, as the
// remainder modulo Phi_d.
struct RootOfUnityValue {
  int modulus_d = 1;
  IntPoly residue;
  std::optional<BigInt> as_integer;  // present iff the residue is constant
};

// Value at exp(2 pi i j / N); d = N / gcd(N, j mod N).
RootOfUnityValue eval_at_unity(const IntPoly& f, int order, long long j);

// Floating Horner evaluation at exp(2 pi i j / N), for cross-checks only.
std::complex<double> eval_complex(const IntPoly& f, int order, long long j);

}  // namespace chordsieve
