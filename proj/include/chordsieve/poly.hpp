#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

#include "chordsieve/error.hpp"

namespace chordsieve {

using BigInt = mpz_class;

// Dense polynomial in q with arbitrary-precision integer coefficients;
// coeffs()[e] is the coefficient of q^e. The leading coefficient is never
// zero and the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& value);
  static IntPoly monomial(int exponent, const BigInt& coefficient = 1);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(int exponent) const;
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt eval(const BigInt& q) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

// Thrown when a quotient is not an integer polynomial.
class InexactDivision : public Error {
 public:
  explicit InexactDivision(IntPoly remainder);
  const IntPoly& remainder() const noexcept { return remainder_; }

 private:
  IntPoly remainder_;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// Long division over Z. Requires the divisor to be monic up to sign, so the
// quotient is always integral.
PolyDivision poly_divmod(const IntPoly& dividend, const IntPoly& divisor);

// Quotient when the remainder is zero; InexactDivision otherwise. Works for
// any nonzero divisor as long as every quotient coefficient is an integer.
IntPoly poly_exact_div(const IntPoly& dividend, const IntPoly& divisor);

}  // namespace chordsieve
