#include <gtest/gtest.h>

#include "generators.hpp"
#include "hitchin3/field.hpp"
#include "hitchin3/parse.hpp"

using namespace hitchin3;

namespace {

const FieldElem kAlpha = FieldElem::cbrt2();
const FieldElem kI = FieldElem::i();

}  // namespace

TEST(FieldTest, DefiningRelations) {
  EXPECT_EQ(kI * kI, FieldElem(-1));
  EXPECT_EQ(kAlpha.pow(3), FieldElem(2));
  EXPECT_EQ(kAlpha.pow(-1), kAlpha * kAlpha * FieldElem(Rational(1, 2)));
  EXPECT_EQ(FieldElem(0).pow(0), FieldElem(1));
}

TEST(FieldTest, TwoPowThird) {
  EXPECT_EQ(two_pow_third(0), FieldElem(1));
  EXPECT_EQ(two_pow_third(3), FieldElem(2));
  EXPECT_EQ(two_pow_third(-5), kAlpha * FieldElem(Rational(1, 4)));
  EXPECT_EQ(two_pow_third(-1), kAlpha * kAlpha * FieldElem(Rational(1, 2)));
  for (long long j = -9; j <= 9; ++j)
    for (long long k = -9; k <= 9; ++k) EXPECT_EQ(two_pow_third(j) * two_pow_third(k), two_pow_third(j + k));
}

TEST(FieldTest, InverseOfZeroThrows) {
  try {
    (void)FieldElem().inverse();
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(FieldTest, KnownProducts) {
  // (1 + c2)(1 - c2 + c2^2) = 1 + c2^3 = 3
  const FieldElem x(GaussianRational(1), GaussianRational(1), {});
  const FieldElem y(GaussianRational(1), GaussianRational(-1), GaussianRational(1));
  EXPECT_EQ(x * y, FieldElem(3));
  EXPECT_EQ(x.inverse(), y * FieldElem(Rational(1, 3)));
}

TEST(FieldTest, GaussianCubeRoots) {
  const GaussianRational u(Rational(2), Rational(11));  // (2 + i)^3
  auto r = gaussian_cbrt(u);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, GaussianRational(Rational(2), Rational(1)));

  auto minus_i = gaussian_cbrt(GaussianRational(Rational(0), Rational(1)));
  ASSERT_TRUE(minus_i.has_value());
  EXPECT_EQ(*minus_i * *minus_i * *minus_i, GaussianRational(Rational(0), Rational(1)));

  EXPECT_FALSE(gaussian_cbrt(GaussianRational(Rational(3))).has_value());
  EXPECT_FALSE(gaussian_cbrt(GaussianRational(Rational(1), Rational(1))).has_value());
}

TEST(FieldTest, FieldCubeRoots) {
  auto two = field_cbrt(FieldElem(2));
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->pow(3), FieldElem(2));

  auto quarter = field_cbrt(FieldElem(Rational(1, 4)));
  ASSERT_TRUE(quarter.has_value());
  EXPECT_EQ(*quarter, two_pow_third(-2));

  EXPECT_FALSE(field_cbrt(kAlpha).has_value());
  EXPECT_FALSE(field_cbrt(FieldElem(5)).has_value());
  EXPECT_FALSE(field_cbrt(FieldElem(1) + kAlpha).has_value());
}

TEST(FieldProperty, RingAxioms) {
  gen::Rng rng(0x6669656c64ULL);
  for (int n = 0; n < 10000; ++n) {
    const FieldElem a = gen::field_elem(rng);
    const FieldElem b = gen::field_elem(rng);
    const FieldElem c = gen::field_elem(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, FieldElem());
  }
}

TEST(FieldProperty, Inverse) {
  gen::Rng rng(0x696e76ULL);
  for (int n = 0; n < 2000; ++n) {
    const FieldElem a = gen::nonzero_field_elem(rng);
    ASSERT_EQ(a * a.inverse(), FieldElem(1));
    ASSERT_EQ(field_inv(field_inv(a)), a);
  }
}

TEST(FieldProperty, CubeRootRoundTrip) {
  gen::Rng rng(0x63627274ULL);
  for (int n = 0; n < 500; ++n) {
    // u * 2^(3k) has a cube root whenever u is a Gaussian cube; powers of c2 are not cubes.
    const GaussianRational g = gen::gaussian(rng);
    if (g.is_zero()) continue;
    const FieldElem cube = FieldElem(g * g * g) * two_pow_third(3 * gen::uniform(rng, -2, 2));
    auto root = field_cbrt(cube);
    ASSERT_TRUE(root.has_value());
    ASSERT_EQ(root->pow(3), cube);
  }
}
