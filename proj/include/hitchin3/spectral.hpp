#pragma once

// Hitchin-section Higgs data for rank 3 and the frames adapted to a
// degenerate (one- or two-sheeted) spectral curve.
//
// Everything is written in coordinates against the surface frame
// (dz, 1, dz^{-1}) on C or (dz/z, 1, (dz/z)^{-1}) on C*.  Both surfaces use
// the same algebra; only the order bookkeeping at the punctures differs.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "format.hpp"
#include "laurent.hpp"
#include "verification.hpp"

namespace hitchin3 {

using Matrix3 = std::array<std::array<LaurentPoly, 3>, 3>;

struct CoefficientPair {
  LaurentPoly q2;
  LaurentPoly q3;
};

/// Either the 1-form coefficient f directly, or the pair (q2, q3).
struct HiggsInput {
  SurfaceKind surface = SurfaceKind::AffineLine;
  std::variant<LaurentPoly, CoefficientPair> payload;
};

struct SpectralClassification {
  int sheets = 3;
  std::optional<LaurentPoly> f;
  std::optional<LaurentPoly> lambda1;  // 2^{2/3} f
  std::optional<LaurentPoly> lambda2;  // -2^{-1/3} f
};

/// Column vector of three coordinates, divided by a common denominator.
struct FrameVector {
  std::array<LaurentPoly, 3> coords;
  LaurentPoly denom{1};

  FrameVector() = default;
  FrameVector(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d = LaurentPoly(1))
      : coords{std::move(a), std::move(b), std::move(c)}, denom(std::move(d)) {}

  bool is_polynomial() const { return denom == LaurentPoly(1); }
  LaurentFraction component(std::size_t k) const { return {coords[k], denom}; }

  friend FrameVector operator+(const FrameVector& u, const FrameVector& w) {
    if (u.denom == w.denom)
      return {u.coords[0] + w.coords[0], u.coords[1] + w.coords[1], u.coords[2] + w.coords[2], u.denom};
    return {u.coords[0] * w.denom + w.coords[0] * u.denom, u.coords[1] * w.denom + w.coords[1] * u.denom,
            u.coords[2] * w.denom + w.coords[2] * u.denom, u.denom * w.denom};
  }
  friend FrameVector operator*(const LaurentFraction& s, const FrameVector& u) {
    return {s.num() * u.coords[0], s.num() * u.coords[1], s.num() * u.coords[2], s.den() * u.denom};
  }
  friend FrameVector operator-(const FrameVector& u, const FrameVector& w) {
    return u + LaurentFraction(LaurentPoly(-1)) * w;
  }
  bool is_zero() const { return coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero(); }
  friend bool operator==(const FrameVector& u, const FrameVector& w) { return (u - w).is_zero(); }
};

inline std::string render(const FrameVector& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < 3; ++k) {
    if (k) out += ", ";
    out += render(v.component(k));
  }
  return out + "]";
}

inline FrameVector act(const Matrix3& m, const FrameVector& v) {
  FrameVector r;
  r.denom = v.denom;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.coords[i] += m[i][j] * v.coords[j];
  return r;
}

inline Matrix3 build_theta_matrix(const LaurentPoly& q2, const LaurentPoly& q3) {
  return {{{LaurentPoly{}, q2, q3}, {LaurentPoly(1), LaurentPoly{}, q2}, {LaurentPoly{}, LaurentPoly(1), LaurentPoly{}}}};
}

inline LaurentPoly determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// 32 q2^3 - 27 q3^2, the discriminant of t^3 - 2 q2 t - q3.
inline LaurentPoly discriminant(const LaurentPoly& q2, const LaurentPoly& q3) {
  return FieldElem(32) * q2.pow(3) - FieldElem(27) * q3.pow(2);
}

/// 3 * 2^{-5/3}, the constant relating q2 to the square of the 1-form.
inline FieldElem q2_constant() { return FieldElem(3) * two_pow_third(-5); }

inline CoefficientPair coefficients_from_form(const LaurentPoly& f) {
  return {q2_constant() * f.pow(2), f.pow(3)};
}

inline LaurentPoly lambda1_coeff(const LaurentPoly& f) { return two_pow_third(2) * f; }
inline LaurentPoly lambda2_coeff(const LaurentPoly& f) { return -two_pow_third(-1) * f; }

inline void validate_payload(const HiggsInput& in) {
  if (in.surface != SurfaceKind::AffineLine) return;
  auto check = [](const LaurentPoly& p, const char* what) {
    if (!p.is_zero() && *p.ord_low() < 0)
      throw Error(ErrorCode::MalformedInput, std::string(what) + " has negative exponents on the affine line");
  };
  if (const auto* f = std::get_if<LaurentPoly>(&in.payload)) {
    check(*f, "f");
  } else {
    const auto& qs = std::get<CoefficientPair>(in.payload);
    check(qs.q2, "q2");
    check(qs.q3, "q3");
  }
}

inline SpectralClassification classification_for_form(const LaurentPoly& f) {
  SpectralClassification out;
  out.f = f;
  if (f.is_zero()) {
    out.sheets = 1;
    return out;
  }
  out.sheets = 2;
  out.lambda1 = lambda1_coeff(f);
  out.lambda2 = lambda2_coeff(f);
  return out;
}

inline SpectralClassification classify_spectral(const HiggsInput& in) {
  validate_payload(in);
  if (const auto* f = std::get_if<LaurentPoly>(&in.payload)) return classification_for_form(*f);

  const auto& [q2, q3] = std::get<CoefficientPair>(in.payload);
  if (!discriminant(q2, q3).is_zero()) return SpectralClassification{};
  if (q3.is_zero()) return classification_for_form(LaurentPoly{});

  auto consistent = [&](const LaurentPoly& f) { return q2_constant() * f.pow(2) == q2 && f.pow(3) == q3; };
  auto f = lp_cbrt(q3);
  // The cube-root search only handles leading coefficients u*c2^j.  When the
  // discriminant vanishes, f = q3 / (q2 / (3*2^{-5/3})) whenever f exists.
  if (!f && !q2.is_zero()) f = lp_divide_exact(q2_constant() * q3, q2);
  if (!f) throw Error(ErrorCode::FieldTooSmall, "q3 has no cube root over Q(i, 2^{1/3})");
  if (!consistent(*f))
    throw Error(ErrorCode::FieldTooSmall, "cube root of q3 is inconsistent with q2 (branch outside the field)");
  return classification_for_form(*f);
}

/// Eigen/Jordan sections (s1, s2, s3).
inline std::array<FrameVector, 3> sections_frame(const LaurentPoly& f) {
  const LaurentPoly f2 = f.pow(2);
  return {FrameVector(FieldElem(5) * two_pow_third(-5) * f2, two_pow_third(2) * f, LaurentPoly(1)),
          FrameVector(-two_pow_third(-5) * f2, -two_pow_third(-1) * f, LaurentPoly(1)),
          FrameVector(-two_pow_third(2) * f, LaurentPoly(1), LaurentPoly{})};
}

/// Antidiagonal symmetric pairing u1 w3 + u2 w2 + u3 w1.
inline LaurentFraction pairing(const FrameVector& u, const FrameVector& w) {
  LaurentPoly num = u.coords[0] * w.coords[2] + u.coords[1] * w.coords[1] + u.coords[2] * w.coords[0];
  return {num, u.denom * w.denom};
}

inline void require_nonzero_form(const LaurentPoly& f, const char* op) {
  if (f.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, std::string(op) + " requires a two-sheeted covering (f != 0)");
}

inline VerificationLog verify_jordan_frame(const LaurentPoly& f) {
  require_nonzero_form(f, "verify_jordan_frame");
  const auto [q2, q3] = coefficients_from_form(f);
  const Matrix3 m = build_theta_matrix(q2, q3);
  const auto s = sections_frame(f);
  const LaurentFraction l1(lambda1_coeff(f));
  const LaurentFraction l2(lambda2_coeff(f));

  VerificationLog log;
  auto check = [&](const char* name, const FrameVector& residual) {
    log.record(name, residual.is_zero(), residual.is_zero() ? "" : render(residual));
  };
  check("jordan: theta s1 = lambda1 s1", act(m, s[0]) - l1 * s[0]);
  check("jordan: theta s2 = lambda2 s2", act(m, s[1]) - l2 * s[1]);
  check("jordan: theta s3 = lambda2 s3 + s2", act(m, s[2]) - l2 * s[2] - s[1]);
  log.throw_if_violated();
  return log;
}

struct Orthogonalization {
  FrameVector v2;
  FrameVector v3;
  LaurentFraction solved_coefficient;     // C(s3,s3) / (2 C(s2,s3))
  LaurentFraction displayed_coefficient;  // 2 C(s3,s3) / C(s2,s3)
  bool solved_isotropic = false;
  bool displayed_isotropic = false;
  LaurentFraction displayed_residual;     // C(v3', v3') for the displayed coefficient
  LaurentFraction c33;                    // C(s3, s3)
};

/// Isotropic frame (v2, v3) of the generalized lambda2-eigenbundle: v2 = s2,
/// v3 = s3 - t s2 with t solving C(v3, v3) = 0.  C(s2, s2) = 0 makes the
/// equation linear in t.
inline Orthogonalization orthogonalize(const LaurentPoly& f) {
  require_nonzero_form(f, "orthogonalize");
  const auto s = sections_frame(f);
  const LaurentFraction c22 = pairing(s[1], s[1]);
  const LaurentFraction c23 = pairing(s[1], s[2]);
  const LaurentFraction c33 = pairing(s[2], s[2]);
  if (!c22.is_zero() || c23.is_zero())
    throw Error(ErrorCode::IdentityViolated, "expected C(s2,s2) = 0 and C(s2,s3) != 0");

  Orthogonalization out{s[1], {}, c33 / (LaurentFraction(LaurentPoly(2)) * c23),
                        LaurentFraction(LaurentPoly(2)) * c33 / c23, false, false, {}, c33};
  out.v3 = s[2] - out.solved_coefficient * s[1];
  out.solved_isotropic = pairing(out.v3, out.v3).is_zero();
  const FrameVector displayed_v3 = s[2] - out.displayed_coefficient * s[1];
  out.displayed_residual = pairing(displayed_v3, displayed_v3);
  out.displayed_isotropic = out.displayed_residual.is_zero();
  if (!out.solved_isotropic) throw Error(ErrorCode::IdentityViolated, "solved coefficient does not give isotropy");
  return out;
}

enum class Puncture { Zero, Infinity };

inline const char* to_string(Puncture p) { return p == Puncture::Zero ? "0" : "inf"; }

/// ord_p(omega) against the local coordinate differential at the puncture.
inline long long ord_omega_at_puncture(const LaurentPoly& f, SurfaceKind surface, Puncture p) {
  require_nonzero_form(f, "ord_omega_at_puncture");
  if (surface == SurfaceKind::AffineLine) {
    if (p == Puncture::Zero) throw Error(ErrorCode::InvalidPuncture, "0 is not a puncture of the affine line");
    return -(*f.deg_high() + 2);
  }
  if (p == Puncture::Zero) return *f.ord_low() - 1;
  return -*f.deg_high() - 1;
}

/// Both isotropy candidates side by side.  The displayed coefficient is
/// informational: it leaves C(v3,v3) = -3 C(s3,s3).
inline VerificationLog orthogonalization_log(const Orthogonalization& o) {
  VerificationLog log;
  log.record("orthogonalize: solved coefficient C(s3,s3)/(2 C(s2,s3)) gives C(v3,v3) = 0", o.solved_isotropic, "",
             "coefficient = " + render(o.solved_coefficient));
  log.record_informational("orthogonalize: displayed coefficient 2 C(s3,s3)/C(s2,s3) gives C(v3,v3) = 0",
                           o.displayed_isotropic, o.displayed_isotropic ? "" : render(o.displayed_residual),
                           "coefficient = " + render(o.displayed_coefficient));
  {
    const LaurentFraction residual = o.displayed_residual - LaurentFraction(LaurentPoly(-3)) * o.c33;
    log.record("orthogonalize: displayed-coefficient residual equals -3 C(s3,s3)", residual.is_zero(),
               residual.is_zero() ? "" : render(residual));
  }
  return log;
}

inline VerificationLog orthogonalization_log(const LaurentPoly& f) {
  require_nonzero_form(f, "orthogonalization_log");
  return orthogonalization_log(orthogonalize(f));
}

/// Pairing, orthogonalization and global degree identities, logged.
inline VerificationLog verify_frame_identities(const LaurentPoly& f, SurfaceKind surface) {
  require_nonzero_form(f, "verify_frame_identities");
  VerificationLog log;
  const auto [q2, q3] = coefficients_from_form(f);
  const LaurentPoly disc = discriminant(q2, q3);
  log.record("discriminant(3*2^(-5/3) f^2, f^3) = 0", disc.is_zero(), disc.is_zero() ? "" : render(disc));

  const LaurentPoly l1 = lambda1_coeff(f);
  const LaurentPoly l2 = lambda2_coeff(f);
  auto poly_check = [&](const std::string& name, const LaurentPoly& residual) {
    log.record(name, residual.is_zero(), residual.is_zero() ? "" : render(residual));
  };
  poly_check("eigenvalues: lambda1 + 2 lambda2 = 0", l1 + FieldElem(2) * l2);
  poly_check("eigenvalues: 2 lambda1 lambda2 + lambda2^2 = -2 q2", FieldElem(2) * l1 * l2 + l2 * l2 + FieldElem(2) * q2);
  poly_check("eigenvalues: lambda1 lambda2^2 = q3", l1 * l2 * l2 - q3);

  const auto s = sections_frame(f);
  const LaurentFraction c22 = pairing(s[1], s[1]);
  const LaurentFraction c23 = pairing(s[1], s[2]);
  const LaurentFraction c11 = pairing(s[0], s[0]);
  auto frac_check = [&](const std::string& name, const LaurentFraction& residual) {
    log.record(name, residual.is_zero(), residual.is_zero() ? "" : render(residual));
  };
  frac_check("pairing: C(s2,s2) = 0", c22);
  log.record("pairing: C(s2,s3) != 0", !c23.is_zero());
  frac_check("pairing: C(s2,s3) = -3*2^(-1/3) f", c23 - LaurentFraction(-(FieldElem(3) * two_pow_third(-1)) * f));
  frac_check("pairing: C(s1,s1) = 18*2^(-5/3) f^2", c11 - LaurentFraction(FieldElem(18) * two_pow_third(-5) * f.pow(2)));
  frac_check("pairing: C(s1,s2) = 0", pairing(s[0], s[1]));
  frac_check("pairing: C(s1,s3) = 0", pairing(s[0], s[2]));

  const Orthogonalization o = orthogonalize(f);
  frac_check("isotropic frame: C(v2,v2) = 0", pairing(o.v2, o.v2));
  frac_check("isotropic frame: C(v3,v3) = 0", pairing(o.v3, o.v3));
  const LaurentFraction c_v23 = pairing(o.v2, o.v3);
  log.record("isotropic frame: ord_0 C(v2,v3) = ord_0 f", c_v23.ord_at_zero() == ord_at_zero(f));
  log.record("isotropic frame: ord_inf C(v2,v3) = ord_inf f", c_v23.ord_at_infinity() == ord_at_infinity(f));

  log.append(orthogonalization_log(o));

  long long global = lp_zero_count(f, surface) + ord_omega_at_puncture(f, surface, Puncture::Infinity);
  if (surface == SurfaceKind::PuncturedLine) global += ord_omega_at_puncture(f, surface, Puncture::Zero);
  log.record("global degree: sum of ord(omega) = -2", global == -2,
             global == -2 ? "" : std::to_string(global + 2));
  log.throw_if_violated();
  return log;
}

}  // namespace hitchin3
