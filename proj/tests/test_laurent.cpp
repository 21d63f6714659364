#include <gtest/gtest.h>

#include "generators.hpp"
#include "hitchin3/format.hpp"
#include "hitchin3/laurent.hpp"
#include "hitchin3/parse.hpp"

using namespace hitchin3;

namespace {

LaurentPoly Z(long long e) { return LaurentPoly::z(e); }

}  // namespace

TEST(LaurentTest, OrdersOfZeroPolynomial) {
  const LaurentPoly zero;
  EXPECT_FALSE(zero.ord_low().has_value());
  EXPECT_FALSE(zero.deg_high().has_value());
  EXPECT_FALSE(ord_at_infinity(zero).has_value());
}

TEST(LaurentTest, OrdersAtPunctures) {
  const LaurentPoly p = Z(3) + FieldElem(2) * Z(-2);
  EXPECT_EQ(ord_at_zero(p), -2);
  EXPECT_EQ(ord_at_infinity(p), -3);
  EXPECT_EQ(lp_zero_count(p, SurfaceKind::PuncturedLine), 5);
  EXPECT_EQ(lp_zero_count(Z(2) + Z(1), SurfaceKind::AffineLine), 2);
  EXPECT_EQ(lp_zero_count(Z(2), SurfaceKind::PuncturedLine), 0);
}

TEST(LaurentTest, CancellationDropsTerms) {
  const LaurentPoly p = Z(2) + Z(-1);
  const LaurentPoly q = p - Z(2);
  EXPECT_TRUE(q.is_monomial());
  EXPECT_EQ(q, Z(-1));
  EXPECT_TRUE((p - p).is_zero());
}

TEST(LaurentTest, CubeRootOfKnownCube) {
  // (z + 2 - i z^-1)^3
  const FieldElem i = FieldElem::i();
  LaurentPoly cube;
  cube.add_term(3, FieldElem(1));
  cube.add_term(2, FieldElem(6));
  cube.add_term(1, FieldElem(12) - FieldElem(3) * i);
  cube.add_term(0, FieldElem(8) - FieldElem(12) * i);
  cube.add_term(-1, FieldElem(-3) - FieldElem(12) * i);
  cube.add_term(-2, FieldElem(-6));
  cube.add_term(-3, i);
  auto root = lp_cbrt(cube);
  ASSERT_TRUE(root.has_value());
  EXPECT_EQ(*root, Z(1) + LaurentPoly(2) - i * Z(-1));
}

TEST(LaurentTest, CubeRootRejectsNonCubes) {
  EXPECT_FALSE(lp_cbrt(Z(4)).has_value());
  EXPECT_FALSE(lp_cbrt(Z(3) + LaurentPoly(1)).has_value());
  EXPECT_FALSE(lp_cbrt(FieldElem(3) * Z(6)).has_value());
  auto zero = lp_cbrt(LaurentPoly());
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(zero->is_zero());
}

TEST(LaurentTest, ExactDivision) {
  const LaurentPoly a = Z(2) + LaurentPoly(1);
  const LaurentPoly b = Z(-1) - FieldElem::i() * Z(3);
  auto q = lp_divide_exact(a * b, b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, a);
  EXPECT_FALSE(lp_divide_exact(Z(2), Z(1) + LaurentPoly(1)).has_value());
}

TEST(LaurentTest, FractionNormalisesExactQuotients) {
  const LaurentPoly d = Z(3) + FieldElem(5) * Z(1);
  const LaurentFraction f(FieldElem(-3) * d, d);
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), LaurentPoly(-3));
  const LaurentFraction g(Z(1), Z(1) + LaurentPoly(1));
  EXPECT_FALSE(g.is_polynomial());
  EXPECT_EQ(g.ord_at_zero(), 1);
  EXPECT_EQ(g.ord_at_infinity(), 0);
}

TEST(LaurentProperty, OrdAdditive) {
  gen::Rng rng(0x6f7264ULL);
  for (int n = 0; n < 1000; ++n) {
    const LaurentPoly a = gen::laurent(rng, -6, 6);
    const LaurentPoly b = gen::laurent(rng, -6, 6);
    const LaurentPoly ab = a * b;
    ASSERT_EQ(*ab.ord_low(), *a.ord_low() + *b.ord_low());
    ASSERT_EQ(*ab.deg_high(), *a.deg_high() + *b.deg_high());
    ASSERT_EQ(*ord_at_infinity(ab), *ord_at_infinity(a) + *ord_at_infinity(b));
  }
}

TEST(LaurentProperty, ZeroCountAdditive) {
  gen::Rng rng(0x7a63ULL);
  for (int n = 0; n < 1000; ++n) {
    for (SurfaceKind s : {SurfaceKind::AffineLine, SurfaceKind::PuncturedLine}) {
      const LaurentPoly a = gen::form_for(rng, s);
      const LaurentPoly b = gen::form_for(rng, s);
      ASSERT_EQ(lp_zero_count(a * b, s), lp_zero_count(a, s) + lp_zero_count(b, s));
    }
  }
}

TEST(LaurentProperty, CubeRootRoundTrip) {
  gen::Rng rng(0x6c63627274ULL);
  for (int n = 0; n < 200; ++n) {
    const LaurentPoly f = gen::laurent(rng, -3, 4);
    const LaurentPoly cube = f.pow(3);
    auto root = lp_cbrt(cube);
    ASSERT_TRUE(root.has_value()) << render(f);
    ASSERT_EQ(root->pow(3), cube);
  }
}

TEST(LaurentProperty, CubeRootOfRationalPolynomials) {
  gen::Rng rng(0x72617463ULL);
  for (int n = 0; n < 100; ++n) {
    const LaurentPoly f = gen::rational_poly(rng, gen::uniform(rng, 0, 8));
    auto root = lp_cbrt(f.pow(3));
    ASSERT_TRUE(root.has_value()) << render(f);
    ASSERT_EQ(*root, f);
  }
}

TEST(LaurentTest, CubeRootSearchIsMonomialOnly) {
  // (1 + c2)^3 lies in the field, but its leading coefficient is not u*c2^j.
  const LaurentPoly f = (FieldElem(1) + FieldElem::cbrt2()) * Z(1);
  EXPECT_FALSE(lp_cbrt(f.pow(3)).has_value());
}

TEST(LaurentProperty, RingAxioms) {
  gen::Rng rng(0x72696e67ULL);
  for (int n = 0; n < 500; ++n) {
    const LaurentPoly a = gen::laurent(rng, -4, 4);
    const LaurentPoly b = gen::laurent(rng, -4, 4);
    const LaurentPoly c = gen::laurent(rng, -4, 4);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(lp_arith(a, b, LaurentOp::Sub) + b, a);
  }
}
