#include "chordsieve/poly.hpp"

#include <string>

#include "chordsieve/format.hpp"

namespace chordsieve {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& value) { return IntPoly(std::vector<BigInt>{value}); }

IntPoly IntPoly::monomial(int exponent, const BigInt& coefficient) {
  std::vector<BigInt> c(exponent + 1);
  c[exponent] = coefficient;
  return IntPoly(std::move(c));
}

BigInt IntPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[exponent];
}

BigInt IntPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (BigInt& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

InexactDivision::InexactDivision(IntPoly remainder)
    : Error(ErrorCode::kInexactDivision, "nonzero remainder " + to_text(remainder)),
      remainder_(std::move(remainder)) {}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

namespace {

// Schoolbook long division. Stops early (inexact = true) as soon as a
// leading coefficient does not divide evenly.
struct RawDivision {
  std::vector<BigInt> quotient;
  std::vector<BigInt> remainder;
  bool inexact = false;
};

RawDivision LongDivide(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  }
  RawDivision out;
  out.remainder = dividend.coeffs();
  const int dv = divisor.degree();
  if (dividend.degree() < dv) return out;
  out.quotient.assign(dividend.degree() - dv + 1, 0);
  const BigInt& lead = divisor.leading();
  for (int top = dividend.degree(); top >= dv; --top) {
    BigInt& head = out.remainder[top];
    if (head == 0) continue;
    if (!mpz_divisible_p(head.get_mpz_t(), lead.get_mpz_t())) {
      out.inexact = true;
      return out;
    }
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), head.get_mpz_t(), lead.get_mpz_t());
    out.quotient[top - dv] = factor;
    for (int i = 0; i <= dv; ++i) {
      mpz_submul(out.remainder[top - dv + i].get_mpz_t(), factor.get_mpz_t(),
                 divisor.coeffs()[i].get_mpz_t());
    }
  }
  return out;
}

}  // namespace

PolyDivision poly_divmod(const IntPoly& dividend, const IntPoly& divisor) {
  if (!divisor.is_zero() && abs(divisor.leading()) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "divisor must be monic up to sign");
  }
  RawDivision raw = LongDivide(dividend, divisor);
  return {IntPoly(std::move(raw.quotient)), IntPoly(std::move(raw.remainder))};
}

IntPoly poly_exact_div(const IntPoly& dividend, const IntPoly& divisor) {
  RawDivision raw = LongDivide(dividend, divisor);
  IntPoly remainder(std::move(raw.remainder));
  if (raw.inexact || !remainder.is_zero()) throw InexactDivision(std::move(remainder));
  return IntPoly(std::move(raw.quotient));
}

}  // namespace chordsieve
