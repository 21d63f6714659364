#pragma once

// Built-in identity suite behind the `selfcheck` command.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "parse.hpp"
#include "report.hpp"
#include "special.hpp"
#include "spectral.hpp"
#include "verdict.hpp"

namespace hitchin3 {

namespace detail {

struct SelfcheckRunner {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!ok) ++failures;
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!why.empty()) out << " (" << why << ")";
    out << '\n';
  }
};

inline LaurentPoly poly(std::initializer_list<std::pair<long long, const char*>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += LaurentPoly::monomial(parse_coeff(c), e);
  return p;
}

}  // namespace detail

/// Runs every built-in check, printing one line each.  True when all pass.
inline bool run_selfcheck(std::ostream& out) {
  detail::SelfcheckRunner r{out};
  using detail::poly;
  const FieldElem alpha = FieldElem::cbrt2();

  r.check("field: i^2 = -1", [] { return parse_coeff("i^2") == FieldElem(-1); });
  r.check("field: c2^3 = 2", [] { return parse_coeff("c2^3") == FieldElem(2); });
  r.check("field: c2^-1 = c2^2/2", [&] { return parse_coeff("c2^-1") == alpha * alpha * FieldElem(Rational(1, 2)); });
  r.check("field: 3/4*c2 = 3*2^(-5/3)", [] { return parse_coeff("3/4*c2") == FieldElem(3) * two_pow_third(-5); });
  r.check("field: x * x^-1 = 1", [] {
    for (const char* s : {"1 + c2", "2/3 - i*c2^2", "(1+i)*c2 - 5", "7*i + c2 + c2^2"}) {
      const FieldElem x = parse_coeff(s);
      if (x * x.inverse() != FieldElem(1)) return false;
    }
    return true;
  });
  r.check("field: cube roots of monomials", [] {
    for (const char* s : {"8", "-27/64*i", "2", "(2+i)^3*4"}) {
      const FieldElem x = parse_coeff(s);
      auto root = field_cbrt(x);
      if (!root || root->pow(3) != x) return false;
    }
    return !field_cbrt(parse_coeff("3")).has_value();
  });
  r.check("render/parse round trip", [] {
    for (const char* s : {"0", "-1/2", "3/4*c2 + 1/2*i", "(1 - 2*i)*c2^2 + 5/7*c2 - 1"}) {
      const FieldElem x = parse_coeff(s);
      if (parse_coeff(render(x)) != x) return false;
    }
    return true;
  });
  r.check("laurent: cube root of z^6 is z^2", [] {
    auto root = lp_cbrt(LaurentPoly::z(6));
    return root && *root == LaurentPoly::z(2);
  });
  r.check("laurent: cube root of (z + 2 - i z^-1)^3", [] {
    const LaurentPoly f = poly({{1, "1"}, {0, "2"}, {-1, "-i"}});
    auto root = lp_cbrt(f.pow(3));
    return root && root->pow(3) == f.pow(3);
  });
  r.check("spectral: q2 = 3*2^(-5/3) z^4, q3 = z^6 gives f = z^2", [] {
    const SpectralClassification c = classify_spectral(
        HiggsInput{SurfaceKind::PuncturedLine, CoefficientPair{LaurentPoly::monomial(q2_constant(), 4), LaurentPoly::z(6)}});
    return c.sheets == 2 && *c.f == LaurentPoly::z(2);
  });

  const std::vector<std::pair<SurfaceKind, LaurentPoly>> forms = {
      {SurfaceKind::AffineLine, poly({{2, "1"}})},
      {SurfaceKind::AffineLine, poly({{3, "c2"}, {1, "-i"}, {0, "2/3"}})},
      {SurfaceKind::AffineLine, poly({{6, "1"}, {0, "1"}})},
      {SurfaceKind::PuncturedLine, poly({{1, "1"}, {-1, "1"}})},
      {SurfaceKind::PuncturedLine, poly({{-2, "1/2 + i"}})},
      {SurfaceKind::PuncturedLine, poly({{4, "c2^2"}, {-3, "-5"}})},
  };
  for (const auto& [surface, f] : forms) {
    const std::string tag = std::string(to_string(surface)) + ", f = " + render(f);
    r.check("jordan frame: " + tag, [&] { return verify_jordan_frame(f).all_required_hold(); });
    r.check("frame identities: " + tag, [&] { return verify_frame_identities(f, surface).all_required_hold(); });
    r.check("orthogonalization candidates: " + tag, [&] {
      const VerificationLog log = orthogonalization_log(f);
      return log.entries().size() == 3 && log.entries()[0].holds && !log.entries()[1].holds &&
             log.entries()[2].holds;
    });
  }

  for (int b : {1, 2})
    for (const char* a : {"1", "-i", "2*c2 - 1/3"})
      r.check("special construction b = " + std::to_string(b) + ", a = " + a,
              [&] { return verify_special_construction(b, parse_coeff(a)).all_required_hold(); });

  r.check("affine line table", [] {
    const std::vector<std::pair<LaurentPoly, const char*>> table = {
        {poly({{0, "1"}}), nullptr},          {poly({{1, "1"}}), nullptr},
        {poly({{1, "1"}, {0, "1"}}), nullptr}, {poly({{2, "1"}}), "(2, 5/2]"},
        {poly({{2, "1"}, {1, "1"}}), "(2, 5/2]"}, {poly({{3, "1"}}), "(2, 3]"},
        {poly({{6, "1"}, {0, "1"}}), "(2, 9/2]"}};
    for (const auto& [f, region] : table) {
      const Verdict v = full_verdict(HiggsInput{SurfaceKind::AffineLine, f});
      if ((v.exists == Existence::Yes) != (region != nullptr)) return false;
      if (region && render(*v.weight_region, *v.filtered) != region) return false;
    }
    return true;
  });
  r.check("punctured line table", [] {
    const std::vector<std::pair<LaurentPoly, std::string>> table = {
        {poly({{0, "1"}}), "NilpotentSummand"},
        {poly({{1, "1"}}), "SpecialConstruction(1)"},
        {poly({{2, "1"}}), "SpecialConstruction(2)"},
        {poly({{3, "1"}}), "Reduction(|b|>=3)"},
        {poly({{-1, "1"}}), "SymmetryDerived(SpecialConstruction(1))"},
        {poly({{-2, "1"}}), "SymmetryDerived(SpecialConstruction(2))"},
        {poly({{-3, "1"}}), "Reduction(|b|>=3)"},
        {poly({{1, "1"}, {0, "-1"}}), "Feasible(Z>=1)"},
        {poly({{1, "1"}, {-1, "1"}}), "Feasible(Z>=1)"}};
    for (const auto& [f, route] : table) {
      const Verdict v = full_verdict(HiggsInput{SurfaceKind::PuncturedLine, f});
      if (v.route() != route) return false;
      if ((v.exists == Existence::No) != (route == "NilpotentSummand")) return false;
    }
    return true;
  });
  r.check("canonical degrees for f = z^2 on the affine line", [] {
    const Verdict v = full_verdict(HiggsInput{SurfaceKind::AffineLine, LaurentPoly::z(2)});
    const DegreeRecord& d = *v.canonical_degrees;
    return d.degE1 == -2 && d.degE2 == Rational(-1, 2) && d.degE3 == -2 && d.degE4 == Rational(-1, 2);
  });
  r.check("report is deterministic", [] {
    const std::string job = R"({"surface": "punctured_line", "f": [[1, "1"], [-1, "c2"]],
                                "options": {"verify_identities": true, "region_samples": 4, "seed": 11}})";
    const JobResult a = run_document_text(job);
    const JobResult b = run_document_text(job);
    return a.exit == ExitCode::Yes && serialize(a.report) == serialize(b.report);
  });

  out << (r.failures == 0 ? "selfcheck: all checks passed" : "selfcheck: " + std::to_string(r.failures) + " failed")
      << '\n';
  return r.failures == 0;
}

}  // namespace hitchin3
