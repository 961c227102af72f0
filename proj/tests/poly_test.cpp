#include "chordsieve/poly.hpp"

#include "gtest/gtest.h"

#include "chordsieve/format.hpp"

namespace chordsieve {
namespace {

TEST(IntPoly, Normalizes) {
  EXPECT_TRUE(IntPoly({0, 0}).is_zero());
  EXPECT_EQ(IntPoly({0, 0}).degree(), -1);
  EXPECT_EQ(IntPoly({1, 2, 0}).degree(), 1);
  EXPECT_EQ(IntPoly({1, 1}) - IntPoly({1, 1}), IntPoly());
}

TEST(IntPoly, Multiply) {
  EXPECT_EQ(poly_mul(IntPoly({1, 1}), IntPoly({1, 0, 1})), IntPoly({1, 1, 1, 1}));
  EXPECT_EQ(poly_mul(IntPoly({1, 1}), IntPoly()), IntPoly());
  EXPECT_EQ(IntPoly({1, -1}) * IntPoly({1, 1}), IntPoly({1, 0, -1}));
}

TEST(IntPoly, ExactDivision) {
  EXPECT_EQ(poly_exact_div(IntPoly({-1, 0, 0, 0, 1}), IntPoly({-1, 1})), IntPoly({1, 1, 1, 1}));
  EXPECT_EQ(poly_exact_div(IntPoly({2, 4}), IntPoly({2})), IntPoly({1, 2}));
}

TEST(IntPoly, InexactDivisionCarriesRemainder) {
  try {
    poly_exact_div(IntPoly({1, 0, 1}), IntPoly({1, 1}));
    FAIL();
  } catch (const InexactDivision& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInexactDivision);
    EXPECT_EQ(e.remainder(), IntPoly({2}));
  }
  EXPECT_THROW(poly_exact_div(IntPoly({1, 3}), IntPoly({2})), InexactDivision);
}

TEST(IntPoly, DivMod) {
  const PolyDivision d = poly_divmod(IntPoly({5, 0, 3, 1}), IntPoly({1, 1}));
  EXPECT_EQ(d.quotient * IntPoly({1, 1}) + d.remainder, IntPoly({5, 0, 3, 1}));
  EXPECT_LT(d.remainder.degree(), 1);
  EXPECT_THROW(poly_divmod(IntPoly({1, 1}), IntPoly({1, 2})), Error);
}

TEST(IntPoly, Eval) {
  EXPECT_EQ(IntPoly({1, 2, 3}).eval(2), 17);
  EXPECT_EQ(IntPoly({1, 1, 1}).eval(-1), 1);
  EXPECT_EQ(IntPoly().eval(5), 0);
}

TEST(IntPoly, BigCoefficients) {
  IntPoly p = IntPoly::monomial(0, BigInt("123456789012345678901234567890"));
  p *= BigInt("1000000000000");
  EXPECT_EQ(p.leading().get_str(), "123456789012345678901234567890000000000000");
}

TEST(IntPoly, TextRoundTrip) {
  const IntPoly p({3, 0, -2, 1});
  EXPECT_EQ(to_text(p), "3 - 2*q^2 + 1*q^3");
  EXPECT_EQ(parse_poly(to_text(p)), p);
  EXPECT_EQ(to_text(IntPoly()), "0");
  EXPECT_EQ(parse_poly("0"), IntPoly());
  EXPECT_EQ(poly_from_json(to_json(p)), p);
  EXPECT_EQ(to_json(p).dump(), R"({"coeffs":["3","0","-2","1"]})");
}

}  // namespace
}  // namespace chordsieve
