#include <gtest/gtest.h>

#include "generators.hpp"
#include "hitchin3/format.hpp"
#include "hitchin3/parse.hpp"
#include "hitchin3/spectral.hpp"

using namespace hitchin3;

namespace {

LaurentPoly Z(long long e) { return LaurentPoly::z(e); }

// f = z^3 + 2i z + 5, the sample also used by the symbolic cross-check.
LaurentPoly sample_form() { return Z(3) + FieldElem(2) * FieldElem::i() * Z(1) + LaurentPoly(5); }

}  // namespace

TEST(SpectralTest, CoefficientsFromForm) {
  const auto [q2, q3] = coefficients_from_form(Z(2));
  EXPECT_EQ(q2, parse_coeff("3/4*c2") * Z(4));
  EXPECT_EQ(q3, Z(6));
  EXPECT_TRUE(discriminant(q2, q3).is_zero());
}

TEST(SpectralTest, ClassifyFromCoefficientPair) {
  const HiggsInput in{SurfaceKind::PuncturedLine, CoefficientPair{parse_coeff("3/4*c2") * Z(4), Z(6)}};
  const SpectralClassification c = classify_spectral(in);
  EXPECT_EQ(c.sheets, 2);
  EXPECT_EQ(*c.f, Z(2));
  EXPECT_EQ(render(*c.lambda1), "[(1)*c2^2]*z^2");
  EXPECT_EQ(render(*c.lambda2), "[(-1/2)*c2^2]*z^2");
}

TEST(SpectralTest, ThreeSheets) {
  const HiggsInput in{SurfaceKind::AffineLine, CoefficientPair{Z(1), LaurentPoly(1)}};
  EXPECT_EQ(classify_spectral(in).sheets, 3);
}

TEST(SpectralTest, OneSheet) {
  const HiggsInput in{SurfaceKind::AffineLine, CoefficientPair{LaurentPoly(), LaurentPoly()}};
  const SpectralClassification c = classify_spectral(in);
  EXPECT_EQ(c.sheets, 1);
  EXPECT_TRUE(c.f->is_zero());
  EXPECT_EQ(classify_spectral(HiggsInput{SurfaceKind::PuncturedLine, LaurentPoly()}).sheets, 1);
}

TEST(SpectralTest, LeadingCoefficientOutsideCubeRootSearch) {
  // (1 + c2)^3 = 3 + 3 c2 + 3 c2^2 is not of the form u*c2^j, so the cube-root
  // search gives up and f comes from q3 / q2 instead.
  const LaurentPoly f = (FieldElem(1) + FieldElem::cbrt2()) * Z(2) + LaurentPoly(1);
  const auto [q2, q3] = coefficients_from_form(f);
  EXPECT_FALSE(lp_cbrt(q3).has_value());
  const SpectralClassification c = classify_spectral(HiggsInput{SurfaceKind::AffineLine, CoefficientPair{q2, q3}});
  EXPECT_EQ(c.sheets, 2);
  EXPECT_EQ(*c.f, f);
}

TEST(SpectralTest, NegativeExponentsOnAffineLineRejected) {
  try {
    (void)classify_spectral(HiggsInput{SurfaceKind::AffineLine, Z(-1)});
    FAIL() << "expected MalformedInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedInput);
  }
}

TEST(SpectralTest, PairingValuesForSample) {
  const LaurentPoly f = sample_form();
  const auto s = sections_frame(f);
  EXPECT_TRUE(pairing(s[1], s[1]).is_zero());
  // C(s2,s3) = -3*2^{2/3}/2 f and C(s1,s1) = 9*2^{1/3}/2 f^2 from the symbolic cross-check.
  EXPECT_EQ(pairing(s[1], s[2]), LaurentFraction(parse_coeff("-3/2*c2^2") * f));
  EXPECT_EQ(pairing(s[0], s[0]), LaurentFraction(parse_coeff("9/2*c2") * f.pow(2)));
  EXPECT_EQ(pairing(s[2], s[2]), LaurentFraction(LaurentPoly(1)));
}

TEST(SpectralTest, OrthogonalizationCandidates) {
  const LaurentPoly f = sample_form();
  const Orthogonalization o = orthogonalize(f);
  // solved t = -2^{1/3}/(6 f), displayed t = -2*2^{1/3}/(3 f)
  EXPECT_EQ(o.solved_coefficient, LaurentFraction(LaurentPoly(parse_coeff("-1/6*c2")), f));
  EXPECT_EQ(o.displayed_coefficient, LaurentFraction(LaurentPoly(parse_coeff("-2/3*c2")), f));
  EXPECT_TRUE(o.solved_isotropic);
  EXPECT_FALSE(o.displayed_isotropic);
  EXPECT_EQ(o.displayed_residual, LaurentFraction(LaurentPoly(-3)));
  EXPECT_EQ(o.displayed_residual, LaurentFraction(LaurentPoly(-3)) * o.c33);

  const VerificationLog log = orthogonalization_log(f);
  ASSERT_EQ(log.entries().size(), 3u);
  EXPECT_TRUE(log.entries()[0].holds);
  EXPECT_FALSE(log.entries()[1].holds);
  EXPECT_FALSE(log.entries()[1].required);
  EXPECT_EQ(log.entries()[1].residual, "[(-3)]");
  EXPECT_TRUE(log.all_required_hold());
}

TEST(SpectralTest, OrdOmega) {
  EXPECT_EQ(ord_omega_at_puncture(Z(2), SurfaceKind::AffineLine, Puncture::Infinity), -4);
  EXPECT_EQ(ord_omega_at_puncture(Z(2), SurfaceKind::PuncturedLine, Puncture::Zero), 1);
  EXPECT_EQ(ord_omega_at_puncture(Z(2), SurfaceKind::PuncturedLine, Puncture::Infinity), -3);
  EXPECT_EQ(ord_omega_at_puncture(Z(-2) + Z(1), SurfaceKind::PuncturedLine, Puncture::Zero), -3);
  try {
    (void)ord_omega_at_puncture(Z(2), SurfaceKind::AffineLine, Puncture::Zero);
    FAIL() << "expected InvalidPuncture";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPuncture);
  }
}

TEST(SpectralTest, ZeroFormRejected) {
  try {
    (void)verify_jordan_frame(LaurentPoly());
    FAIL() << "expected ZeroPolynomial";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPolynomial);
  }
}

TEST(SpectralProperty, IdentitySuites) {
  gen::Rng rng(0x737065637472ULL);
  for (int n = 0; n < 40; ++n) {
    for (SurfaceKind s : {SurfaceKind::AffineLine, SurfaceKind::PuncturedLine}) {
      const LaurentPoly f = gen::form_for(rng, s);
      ASSERT_TRUE(verify_jordan_frame(f).all_required_hold()) << render(f);
      ASSERT_TRUE(verify_frame_identities(f, s).all_required_hold()) << render(f);
    }
  }
}

TEST(SpectralProperty, PairingSymmetric) {
  gen::Rng rng(0x73796d6dULL);
  for (int n = 0; n < 100; ++n) {
    const FrameVector u(gen::laurent(rng, -3, 3), gen::laurent(rng, -3, 3), gen::laurent(rng, -3, 3));
    const FrameVector w(gen::laurent(rng, -3, 3), gen::laurent(rng, -3, 3), gen::laurent(rng, -3, 3));
    ASSERT_EQ(pairing(u, w), pairing(w, u));
  }
}

TEST(SpectralProperty, ClassificationIdempotent) {
  gen::Rng rng(0x6964656dULL);
  for (int n = 0; n < 100; ++n) {
    const SurfaceKind s = gen::coin(rng) ? SurfaceKind::AffineLine : SurfaceKind::PuncturedLine;
    const LaurentPoly f = gen::form_for(rng, s);
    const auto [q2, q3] = coefficients_from_form(f);
    const SpectralClassification c = classify_spectral(HiggsInput{s, CoefficientPair{q2, q3}});
    ASSERT_EQ(c.sheets, 2);
    ASSERT_EQ(*c.f, f);
    const SpectralClassification again = classify_spectral(HiggsInput{s, *c.f});
    ASSERT_EQ(*again.f, *c.f);
    ASSERT_EQ(*again.lambda1, *c.lambda1);
  }
}

TEST(SpectralProperty, GlobalDegree) {
  gen::Rng rng(0x676c6f62ULL);
  for (int n = 0; n < 100; ++n) {
    for (SurfaceKind s : {SurfaceKind::AffineLine, SurfaceKind::PuncturedLine}) {
      const LaurentPoly f = gen::form_for(rng, s);
      long long total = lp_zero_count(f, s) + ord_omega_at_puncture(f, s, Puncture::Infinity);
      if (s == SurfaceKind::PuncturedLine) total += ord_omega_at_puncture(f, s, Puncture::Zero);
      ASSERT_EQ(total, -2);
    }
  }
}
