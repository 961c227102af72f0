#include "chordsieve/qanalog.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "chordsieve/matching.hpp"

namespace chordsieve {

IntPoly q_int(int m) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "q_int needs m >= 0");
  return IntPoly(std::vector<BigInt>(m, 1));
}

IntPoly q_binomial(int m, int r) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "q_binomial needs m >= 0");
  if (r < 0 || r > m) return {};
  r = std::min(r, m - r);  // symmetric in r <-> m - r
  // row[c] holds [i, c] for the current row i, c = 0..r.
  std::vector<IntPoly> row(r + 1);
  row[0] = IntPoly{1};
  for (int i = 1; i <= m; ++i) {
    for (int c = std::min(i, r); c >= 1; --c) {
      IntPoly shifted = row[c] * IntPoly::monomial(c);
      row[c] = row[c - 1] + shifted;
    }
  }
  return row[r];
}

IntPoly q_binomial_product(int m, int r) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "q_binomial needs m >= 0");
  if (r < 0 || r > m) return {};
  IntPoly numerator{1};
  for (int i = 0; i < r; ++i) numerator = numerator * q_int(m - i);
  for (int i = 1; i <= r; ++i) numerator = poly_exact_div(numerator, q_int(i));
  return numerator;
}

IntPoly cyclotomic(int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "cyclotomic needs d >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  IntPoly value = IntPoly::monomial(d) - IntPoly{1};
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) value = poly_exact_div(value, cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return memo.emplace(d, std::move(value)).first->second;
}

IntPoly csp_polynomial(int n, int k) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  switch (k) {
    case 1:
      return q_binomial(2 * n, n - 2);
    case 2:
      return poly_exact_div(q_int(n + 3) * q_binomial(2 * n, n - 3), q_int(2));
    case 3:
      return poly_exact_div(q_binomial(n + 5, 2) * q_binomial(2 * n, n - 4), q_int(3)) +
             q_binomial(2 * n, n - 3);
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "no polynomial for k=" + std::to_string(k) + " (k must be 1, 2 or 3)");
  }
}

RootOfUnityValue eval_at_unity(const IntPoly& f, int order, long long j) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "root order must be positive");
  const int reduced = reduce_mod(j, order);
  RootOfUnityValue out;
  out.modulus_d = order / std::gcd(order, reduced);
  out.residue = poly_divmod(f, cyclotomic(out.modulus_d)).remainder;
  if (out.residue.degree() <= 0) out.as_integer = out.residue.coeff(0);
  return out;
}

std::complex<double> eval_complex(const IntPoly& f, int order, long long j) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "root order must be positive");
  const double angle = 2.0 * std::numbers::pi * reduce_mod(j, order) / order;
  const std::complex<double> root = std::polar(1.0, angle);
  std::complex<double> acc = 0.0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * root + it->get_d();
  }
  return acc;
}

}  // namespace chordsieve
