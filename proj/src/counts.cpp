#include "chordsieve/counts.hpp"

#include <numeric>
#include <string>

#include "chordsieve/matching.hpp"

namespace chordsieve {
namespace {

BigInt DivideExactly(const BigInt& value, long divisor) {
  BigInt d(divisor);
  if (!mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t())) {
    throw Error(ErrorCode::kInexactDivision,
                value.get_str() + " is not divisible by " + std::to_string(divisor));
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), value.get_mpz_t(), d.get_mpz_t());
  return out;
}

void CheckK(int k, int low) {
  if (k < low || k > 3) {
    throw Error(ErrorCode::kInvalidArgument, "k=" + std::to_string(k) + " is not covered");
  }
}

}  // namespace

BigInt binomial(long m, long r) {
  if (m < 0 || r < 0 || r > m) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  return out;
}

BigInt catalan(int n) { return DivideExactly(binomial(2L * n, n), n + 1); }

BigInt double_factorial(int m) {
  BigInt out = 1;
  for (int i = m; i > 1; i -= 2) out *= i;
  return out;
}

BigInt closed_count(int n, int k) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  CheckK(k, 0);
  const long m = 2L * n;
  switch (k) {
    case 0: return catalan(n);
    case 1: return binomial(m, n - 2);
    case 2: return DivideExactly((n + 3) * binomial(m, n - 3), 2);
    default:
      return DivideExactly(binomial(n + 5, 2) * binomial(m, n - 4), 3) + binomial(m, n - 3);
  }
}

std::optional<BigInt> fixed_count_formula(int n, int k, long long j) {
  CheckK(k, 1);
  if (n < 3) return std::nullopt;
  const int size = 2 * n;
  // gcd(0, 2n) is 2n, so j = 0 mod 2n lands in the identity case.
  const int g = std::gcd(reduce_mod(j, size), size);
  if (g == size) return closed_count(n, k);
  // For odd multiples of 3 some three-crossing matchings are fixed by the
  // rotation by n/3 (at n=3, (1,4)(2,5)(3,6) is fixed by every rotation), so
  // the vanishing claim does not hold there and no value is asserted.
  if (k == 3 && n % 6 == 3 && 3 * g == n) return std::nullopt;
  const bool odd = n % 2 == 1;
  if (g == n) {
    switch (k) {
      case 1: return odd ? BigInt(0) : binomial(n, (n - 2) / 2);
      case 2: return odd ? (n - 1) / 2 * binomial(n, (n - 1) / 2)
                         : (n - 2) / 2 * binomial(n, (n - 2) / 2);
      default: return odd ? binomial(n, (n - 3) / 2)
                          : DivideExactly((n + 4) * binomial(n, (n - 4) / 2), 2);
    }
  }
  if (k == 1 && n % 4 == 2 && 2 * g == n) return binomial(n / 2, (n - 2) / 4);
  if (k == 3 && n % 3 == 0 && 3 * g == size) return third_turn_fixed_count(n);
  return BigInt(0);
}

BigInt two_crossing_type_size(int n, int k) { return k * binomial(2L * n, n - k); }

BigInt symmetric_type_size(int n, int k) {
  if (n % 3 != 0 || k < 1 || 3 * k > n) return 0;
  const long third = 2L * n / 3;
  if (k == 1) return binomial(third, (n - 3) / 3);
  return 2 * k * binomial(third, (n - 3 * k) / 3);
}

BigInt third_turn_fixed_count(int n) {
  if (n % 3 != 0) return 0;
  return n / 3 * binomial(2L * n / 3, n / 3 - 1);
}

BigInt two_crossing_type_sum(int n) {
  BigInt sum = 0;
  for (int k = 3; k <= n; ++k) sum += two_crossing_type_size(n, k);
  return sum;
}

BigInt symmetric_type_sum(int n) {
  BigInt sum = 0;
  for (int k = 1; 3 * k <= n; ++k) sum += symmetric_type_size(n, k);
  return sum;
}

}  // namespace chordsieve
