#pragma once

// Parabolic weight calculus for the diagonal family of filtered extensions:
// at each puncture the isotropic frame (v2, v3) carries weights (d2, d3),
// and the weight of the lambda1-eigenline is forced by perfectness.
//
// With Z the number of interior zeros of omega and g the genus:
//   good     <=> d2 - 1 <= d3                      at every puncture
//   perfect  <=> d2 + d3 = -ord_p(omega)           at every puncture
//   deg E1 = deg E3 = -Z
//   deg E2 = deg E4 = (-Z + sum (d3 - d2) + 2 - 2g) / 2
//   stable  <=> deg E2 < 0 and deg E4 < 0          (requires Z >= 1)

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "format.hpp"

namespace hitchin3 {

struct PunctureSpec {
  std::string id;
  long long ord_omega = 0;
};

struct PunctureWeights {
  Rational d2{0};
  Rational d3{0};

  friend bool operator==(const PunctureWeights& a, const PunctureWeights& b) {
    return a.d2 == b.d2 && a.d3 == b.d3;
  }
};

/// Weights aligned with FilteredSpec::punctures.
using WeightAssignment = std::vector<PunctureWeights>;

struct FilteredSpec {
  long long genus = 0;
  std::vector<PunctureSpec> punctures;
  long long interior_zero_total = 0;
};

struct PredicateResult {
  bool holds = true;
  std::optional<std::size_t> witness;  // first violating puncture

  explicit operator bool() const { return holds; }
};

inline void require_aligned(const FilteredSpec& spec, const WeightAssignment& w) {
  if (w.size() != spec.punctures.size())
    throw Error(ErrorCode::MalformedInput, "weight assignment does not match the puncture list");
}

inline PredicateResult check_good(const FilteredSpec& spec, const WeightAssignment& w) {
  require_aligned(spec, w);
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p].d2 - 1 > w[p].d3) return {false, p};
  return {};
}

inline PredicateResult check_perfect(const FilteredSpec& spec, const WeightAssignment& w) {
  require_aligned(spec, w);
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p].d2 + w[p].d3 != Rational(-spec.punctures[p].ord_omega)) return {false, p};
  return {};
}

struct DegreeRecord {
  Rational degE1;
  Rational degE2;
  Rational degE3;
  Rational degE4;
};

inline DegreeRecord degrees(const FilteredSpec& spec, const WeightAssignment& w) {
  require_aligned(spec, w);
  Rational spread = 0;
  for (const auto& pw : w) spread += pw.d3 - pw.d2;
  const Rational z(spec.interior_zero_total);
  const Rational e2 = (-z + spread + 2 - 2 * Rational(spec.genus)) / 2;
  // E4/E1 is computed separately from E2, but both land on the same formula.
  const Rational e4_over_e1 = (z + spread + 2 - 2 * Rational(spec.genus)) / 2;
  const Rational e4 = e4_over_e1 + (-z);
  return {-z, e2, -z, e4};
}

/// Strict negativity of deg E2 and deg E4 without the Z >= 1 hypothesis.
inline bool stability_inequality(const FilteredSpec& spec, const WeightAssignment& w) {
  const DegreeRecord d = degrees(spec, w);
  return d.degE2 < 0 && d.degE4 < 0;
}

inline void require_zero_hypothesis(const FilteredSpec& spec, const char* op) {
  if (spec.interior_zero_total < 1)
    throw Error(ErrorCode::HypothesisViolated,
                std::string(op) + " requires omega to vanish somewhere in the open surface (Z >= 1)");
}

inline bool check_stable(const FilteredSpec& spec, const WeightAssignment& w) {
  require_zero_hypothesis(spec, "check_stable");
  return stability_inequality(spec, w);
}

/// Feasible weights:  d2[p] <= upper[p] for every puncture, and
/// sum_p 2*d2[p] > strict_lower, with d3 fixed by perfectness.
struct WeightRegion {
  std::vector<Rational> upper;
  Rational strict_lower;

  bool contains_d2(const std::vector<Rational>& d2) const {
    if (d2.size() != upper.size()) return false;
    Rational sum = 0;
    for (std::size_t p = 0; p < d2.size(); ++p) {
      if (d2[p] > upper[p]) return false;
      sum += 2 * d2[p];
    }
    return sum > strict_lower;
  }

  /// Single puncture: the half-open interval (lower, upper] for d2.
  std::optional<std::pair<Rational, Rational>> interval() const {
    if (upper.size() != 1) return std::nullopt;
    return std::pair{strict_lower / 2, upper[0]};
  }
};

inline std::string render(const WeightRegion& r, const FilteredSpec& spec) {
  if (auto iv = r.interval()) return "(" + render(iv->first) + ", " + render(iv->second) + "]";
  std::string out;
  for (std::size_t p = 0; p < r.upper.size(); ++p)
    out += "d2[" + spec.punctures[p].id + "] <= " + render(r.upper[p]) + "; ";
  out += "2*sum(d2) > " + render(r.strict_lower);
  return out;
}

struct Feasibility {
  WeightRegion region;
  WeightAssignment canonical;
};

inline WeightAssignment weights_from_d2(const FilteredSpec& spec, const std::vector<Rational>& d2) {
  WeightAssignment w;
  for (std::size_t p = 0; p < d2.size(); ++p)
    w.push_back({d2[p], Rational(-spec.punctures[p].ord_omega) - d2[p]});
  return w;
}

/// Eliminates d3 by perfectness and bounds d2 by goodness; the stability
/// inequality then caps sum (d3 - d2) from above while goodness bounds it
/// below by -|D|.  Nonempty iff Z + |D| + 2g - 2 > 0.  No hypothesis on Z.
inline std::optional<Feasibility> solve_weight_system(const FilteredSpec& spec) {
  const long long slack = spec.interior_zero_total + static_cast<long long>(spec.punctures.size()) +
                          2 * spec.genus - 2;
  if (slack <= 0) return std::nullopt;
  Feasibility out;
  Rational minus_ord_total = 0;
  std::vector<Rational> canonical_d2;
  for (const auto& p : spec.punctures) {
    out.region.upper.push_back(Rational(1 - p.ord_omega) / 2);
    canonical_d2.push_back(out.region.upper.back());
    minus_ord_total += -p.ord_omega;
  }
  out.region.strict_lower =
      -Rational(spec.interior_zero_total) + minus_ord_total + 2 - 2 * Rational(spec.genus);
  out.canonical = weights_from_d2(spec, canonical_d2);
  return out;
}

inline std::optional<Feasibility> decide_feasible(const FilteredSpec& spec) {
  require_zero_hypothesis(spec, "decide_feasible");
  return solve_weight_system(spec);
}

/// Random rational point of a nonempty region, drawn from raw engine output
/// so that the sequence depends only on the seed.
template <class Engine>
WeightAssignment sample_region_point(const FilteredSpec& spec, const WeightRegion& region, Engine& rng) {
  constexpr unsigned long long kSteps = 1000;
  const std::size_t n = region.upper.size();
  Rational slack = -region.strict_lower;
  for (const auto& u : region.upper) slack += 2 * u;
  std::vector<Rational> d2;
  for (std::size_t p = 0; p < n; ++p) {
    // t_p in [0, 1/n) so that sum t_p < 1 keeps the strict bound.
    Rational t(static_cast<long long>(rng() % kSteps), static_cast<long long>(kSteps * n));
    d2.push_back(region.upper[p] - t * slack / 2);
  }
  return weights_from_d2(spec, d2);
}

/// Random weight assignment violating at least one of good, perfect, stable.
template <class Engine>
WeightAssignment sample_outside_point(const FilteredSpec& spec, const WeightRegion& region, Engine& rng) {
  constexpr unsigned long long kSteps = 1000;
  const std::size_t n = region.upper.size();
  WeightAssignment w = sample_region_point(spec, region, rng);
  const std::size_t p = static_cast<std::size_t>(rng() % n);
  const Rational bump(static_cast<long long>(rng() % kSteps + 1), static_cast<long long>(kSteps));
  switch (rng() % 3) {
    case 0:  // break goodness, keep perfectness
      w[p].d2 = region.upper[p] + bump;
      w[p].d3 = Rational(-spec.punctures[p].ord_omega) - w[p].d2;
      break;
    case 1:  // break perfectness
      w[p].d3 += bump;
      break;
    default: {  // break stability: push sum 2*d2 down to the bound or below
      Rational sum = 0;
      for (const auto& pw : w) sum += 2 * pw.d2;
      w[p].d2 -= (sum - region.strict_lower) / 2 + bump;
      w[p].d3 = Rational(-spec.punctures[p].ord_omega) - w[p].d2;
      break;
    }
  }
  return w;
}

}  // namespace hitchin3
