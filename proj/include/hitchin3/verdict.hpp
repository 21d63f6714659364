#pragma once

#include <memory>
#include <optional>
#include <string>

#include "filtered.hpp"
#include "special.hpp"
#include "spectral.hpp"

namespace hitchin3 {

enum class Existence { Yes, No, YesByRegularSemisimple };

inline const char* to_string(Existence e) {
  switch (e) {
    case Existence::Yes: return "Yes";
    case Existence::No: return "No";
    case Existence::YesByRegularSemisimple: return "YesByRegularSemisimple";
  }
  return "?";
}

enum class Reason {
  RegularSemisimple,       // three sheets; existence by the generic regular semisimple result
  NilpotentHiggsField,     // one sheet: theta nilpotent and nonzero
  NilpotentSummand,        // f constant: the lambda2 summand carries a nonzero nilpotent part
  ClassificationExcludes,  // affine line, deg f = 1: the diagonal family is the only candidate and is empty
  Feasible,                // Z >= 1: diagonal weights from the linear system
  Reduction,               // C*, f = a z^b with |b| >= 3: reduces to the affine line
  SpecialConstruction,     // C*, f = a z^b with b in {1, 2}
  SymmetryDerived,         // C*, f = a z^b with b in {-1, -2}: z -> 1/z then the special construction
};

inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::RegularSemisimple: return "RegularSemisimple";
    case Reason::NilpotentHiggsField: return "NilpotentHiggsField";
    case Reason::NilpotentSummand: return "NilpotentSummand";
    case Reason::ClassificationExcludes: return "ClassificationExcludes";
    case Reason::Feasible: return "Feasible";
    case Reason::Reduction: return "Reduction";
    case Reason::SpecialConstruction: return "SpecialConstruction";
    case Reason::SymmetryDerived: return "SymmetryDerived";
  }
  return "?";
}

struct SpecialConstructionTag {
  int b = 0;                  // exponent the construction is built for (1 or 2)
  FieldElem a;                // coefficient in the coordinate the construction uses
  bool via_inversion = false; // obtained through z -> 1/z
};

struct Verdict;

/// The affine-line problem a monomial on C* reduces to.
struct ReducedProblem {
  LaurentPoly f;  // 1-form coefficient against dz on C
  bool via_inversion = false;
  std::shared_ptr<const Verdict> verdict;
};

struct Verdict {
  SurfaceKind surface = SurfaceKind::AffineLine;
  SpectralClassification classification;
  Existence exists = Existence::No;
  Reason reason = Reason::NilpotentHiggsField;
  std::optional<FilteredSpec> filtered;
  std::optional<WeightRegion> weight_region;
  std::optional<WeightAssignment> canonical_weights;
  std::optional<DegreeRecord> canonical_degrees;
  std::optional<SpecialConstructionTag> construction;
  std::optional<ReducedProblem> reduced;
  VerificationLog log;

  std::string route() const {
    switch (reason) {
      case Reason::Feasible: return "Feasible(Z>=1)";
      case Reason::Reduction: return "Reduction(|b|>=3)";
      case Reason::SpecialConstruction: return "SpecialConstruction(" + std::to_string(construction->b) + ")";
      case Reason::SymmetryDerived: return "SymmetryDerived(SpecialConstruction(" + std::to_string(construction->b) + "))";
      default: return to_string(reason);
    }
  }
};

inline FilteredSpec filtered_spec_for(const LaurentPoly& f, SurfaceKind surface) {
  FilteredSpec spec;
  spec.genus = 0;
  spec.interior_zero_total = lp_zero_count(f, surface);
  if (surface == SurfaceKind::PuncturedLine)
    spec.punctures.push_back({"0", ord_omega_at_puncture(f, surface, Puncture::Zero)});
  spec.punctures.push_back({"inf", ord_omega_at_puncture(f, surface, Puncture::Infinity)});
  return spec;
}

namespace detail {

inline void attach_feasibility(Verdict& v, const FilteredSpec& spec, const Feasibility& feas) {
  v.filtered = spec;
  v.weight_region = feas.region;
  v.canonical_weights = feas.canonical;
  v.canonical_degrees = degrees(spec, feas.canonical);
  const bool good = check_good(spec, feas.canonical).holds;
  const bool perfect = check_perfect(spec, feas.canonical).holds;
  const bool stable = check_stable(spec, feas.canonical);
  v.log.record("canonical weights are good", good);
  v.log.record("canonical weights are perfect", perfect);
  v.log.record("canonical weights are stable", stable);
  v.log.throw_if_violated();
}

inline Verdict affine_line_verdict(Verdict v, const LaurentPoly& f) {
  if (f.is_constant()) {
    v.exists = Existence::No;
    v.reason = Reason::NilpotentSummand;
    return v;
  }
  const FilteredSpec spec = filtered_spec_for(f, SurfaceKind::AffineLine);
  v.filtered = spec;
  if (auto feas = decide_feasible(spec)) {
    v.exists = Existence::Yes;
    v.reason = Reason::Feasible;
    attach_feasibility(v, spec, *feas);
  } else {
    // deg f = 1: every good filtration with perfect pairing is diagonal, and
    // the diagonal family is empty.
    v.exists = Existence::No;
    v.reason = Reason::ClassificationExcludes;
  }
  return v;
}

}  // namespace detail

inline Verdict full_verdict(const HiggsInput& input);

inline Verdict verdict_for_classification(SurfaceKind surface, const SpectralClassification& cls) {
  Verdict v;
  v.surface = surface;
  v.classification = cls;
  if (cls.sheets == 3) {
    v.exists = Existence::YesByRegularSemisimple;
    v.reason = Reason::RegularSemisimple;
    return v;
  }
  if (cls.sheets == 1) {
    v.exists = Existence::No;
    v.reason = Reason::NilpotentHiggsField;
    return v;
  }
  const LaurentPoly& f = *cls.f;
  if (surface == SurfaceKind::AffineLine) return detail::affine_line_verdict(std::move(v), f);

  if (f.is_constant()) {
    v.exists = Existence::No;
    v.reason = Reason::NilpotentSummand;
    return v;
  }
  if (!f.is_monomial()) {
    // A non-monomial Laurent polynomial has a zero in C*.
    const FilteredSpec spec = filtered_spec_for(f, surface);
    auto feas = decide_feasible(spec);
    if (!feas) throw Error(ErrorCode::IdentityViolated, "zero in C* but the weight system is infeasible");
    v.exists = Existence::Yes;
    v.reason = Reason::Feasible;
    detail::attach_feasibility(v, spec, *feas);
    return v;
  }

  const long long b = *f.ord_low();
  const FieldElem& a = f.leading_coeff();
  v.filtered = filtered_spec_for(f, surface);
  if (b >= 3 || b <= -3) {
    // a z^b dz/z = a z^{b-1} dz; for b < 0 use w = 1/z, where the form is -a w^{-b-1} dw.
    ReducedProblem red;
    red.via_inversion = b < 0;
    red.f = b > 0 ? LaurentPoly::monomial(a, b - 1) : LaurentPoly::monomial(-a, -b - 1);
    Verdict inner = full_verdict(HiggsInput{SurfaceKind::AffineLine, red.f});
    if (inner.exists != Existence::Yes)
      throw Error(ErrorCode::IdentityViolated, "reduced affine-line problem has no compatible metric");
    red.verdict = std::make_shared<const Verdict>(std::move(inner));
    v.exists = Existence::Yes;
    v.reason = Reason::Reduction;
    v.weight_region = red.verdict->weight_region;
    v.reduced = std::move(red);
    return v;
  }
  v.exists = Existence::Yes;
  if (b > 0) {
    v.reason = Reason::SpecialConstruction;
    v.construction = SpecialConstructionTag{static_cast<int>(b), a, false};
  } else {
    v.reason = Reason::SymmetryDerived;
    v.construction = SpecialConstructionTag{static_cast<int>(-b), -a, true};
  }
  return v;
}

inline Verdict full_verdict(const HiggsInput& input) {
  return verdict_for_classification(input.surface, classify_spectral(input));
}

}  // namespace hitchin3
