#pragma once

#include <optional>

#include "chordsieve/poly.hpp"

namespace chordsieve {

// Ordinary binomial; zero when r < 0 or r > m.
BigInt binomial(long m, long r);
BigInt catalan(int n);
BigInt double_factorial(int m);

// |P(n,k)| from its closed form, k = 0..3:
//   k=0  Catalan(n)
//   k=1  C(2n, n-2)
//   k=2  (n+3)/2 C(2n, n-3)
//   k=3  C(n+5, 2) C(2n, n-4) / 3 + C(2n, n-3)
BigInt closed_count(int n, int k);

// Number of matchings in P(n,k), k = 1..3, fixed by rotation by j, from the
// case analysis of the fixed-point lemmas. Only g = gcd(j, 2n) matters:
//   g = 2n            : closed_count(n, k)
//   g = n             : half-turn counts (depend on the parity of n)
//   g = n/2, k = 1    : quarter-turn count when n = 2 mod 4
//   g = 2n/3, k = 3   : third-turn count when 3 | n
//   anything else     : 0
// Empty for n < 3, and for k = 3 with n = 3 mod 6 and g = n/3: there the
// lemmas claim 0 but brute force finds fixed matchings (1 at n=3, 3 at n=9).
std::optional<BigInt> fixed_count_formula(int n, int k, long long j);

// |T_k| = k C(2n, n-k).
BigInt two_crossing_type_size(int n, int k);

// Size of F ∩ R_k inside the 1/3-turn fixed three-crossing matchings
// (3 | n, 1 <= k <= n/3): C(2n/3, (n-3)/3) for k=1, 2k C(2n/3, (n-3k)/3)
// otherwise.
BigInt symmetric_type_size(int n, int k);

// |F| = (n/3) C(2n/3, n/3 - 1) for 3 | n.
BigInt third_turn_fixed_count(int n);

// Left and right sides of the two telescoping identities:
//   sum_{k=3}^{n} k C(2n, n-k)             = (n+3)/2 C(2n, n-3)
//   sum_{k=1}^{n/3} |F ∩ R_k|              = (n/3) C(2n/3, n/3 - 1)
BigInt two_crossing_type_sum(int n);
BigInt symmetric_type_sum(int n);

}  // namespace chordsieve
