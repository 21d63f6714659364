#pragma once

// Job documents in, report documents out.  Both are JSON; a document is a
// single job object or an array of them.
//
//   {"surface": "punctured_line",
//    "f": [[2, "1"], [-1, "3/4*c2"]],            or  "q2": [...], "q3": [...]
//    "options": {"verify_identities": true, "region_samples": 8, "seed": 7}}
//
// Reports are emitted with a fixed key order so that equal inputs give
// byte-identical output.

#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "filtered.hpp"
#include "format.hpp"
#include "laurent.hpp"
#include "parse.hpp"
#include "special.hpp"
#include "spectral.hpp"
#include "verdict.hpp"
#include "version.hpp"

namespace hitchin3 {

using Json = nlohmann::ordered_json;

struct JobOptions {
  bool verify_identities = false;
  std::uint64_t region_samples = 0;
  std::uint64_t seed = 0;
};

/// CLI flags layered over the per-job options.
struct OptionOverrides {
  bool verify_identities = false;
  std::optional<std::uint64_t> region_samples;
  std::optional<std::uint64_t> seed;
};

struct JobSpec {
  HiggsInput input;
  JobOptions options;
  Json echo;  // the job object as given
};

enum class ExitCode : int { Yes = 0, No = 1, InputError = 2, IdentityViolation = 3 };

struct JobResult {
  Json report;
  ExitCode exit = ExitCode::Yes;
};

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

inline LaurentPoly parse_term_list(const Json& j, const std::string& key) {
  if (!j.is_array()) malformed(key + " must be an array of [exponent, coefficient] pairs");
  LaurentPoly out;
  std::vector<long long> seen;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
      malformed(key + " terms must be [integer exponent, \"coefficient\"]");
    const long long e = term[0].get<long long>();
    for (long long s : seen)
      if (s == e) malformed(key + " repeats exponent " + std::to_string(e));
    seen.push_back(e);
    out += LaurentPoly::monomial(parse_coeff(term[1].get<std::string>()), e);
  }
  return out;
}

inline std::uint64_t parse_unsigned(const Json& j, const std::string& key) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::uint64_t>(j.get<long long>());
  malformed(key + " must be a nonnegative integer");
}

inline Json term_list(const LaurentPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out.push_back(Json::array({it->first, render(it->second)}));
  return out;
}

inline Json exact(const Rational& r) { return Json{{"exact", render(r)}, {"approx", approx_decimal(r)}}; }

inline Json filtered_json(const FilteredSpec& spec) {
  Json punctures = Json::array();
  for (const auto& p : spec.punctures) punctures.push_back(Json{{"id", p.id}, {"ord_omega", p.ord_omega}});
  return Json{{"genus", spec.genus}, {"interior_zero_total", spec.interior_zero_total}, {"punctures", punctures}};
}

inline Json region_json(const WeightRegion& r, const FilteredSpec& spec) {
  Json upper = Json::object();
  for (std::size_t p = 0; p < r.upper.size(); ++p) upper[spec.punctures[p].id] = exact(r.upper[p]);
  return Json{{"text", render(r, spec)}, {"d2_upper", upper}, {"two_sum_d2_strict_lower", exact(r.strict_lower)}};
}

inline Json weights_json(const WeightAssignment& w, const FilteredSpec& spec) {
  Json out = Json::array();
  for (std::size_t p = 0; p < w.size(); ++p)
    out.push_back(Json{{"puncture", spec.punctures[p].id}, {"d2", exact(w[p].d2)}, {"d3", exact(w[p].d3)}});
  return out;
}

inline Json degrees_json(const DegreeRecord& d) {
  return Json{{"E1", exact(d.degE1)}, {"E2", exact(d.degE2)}, {"E3", exact(d.degE3)}, {"E4", exact(d.degE4)}};
}

inline Json verdict_json(const Verdict& v) {
  Json out;
  out["surface"] = to_string(v.surface);
  out["exists"] = to_string(v.exists);
  out["reason"] = to_string(v.reason);
  out["route"] = v.route();
  if (v.classification.sheets == 1)
    out["note"] = "theta is nilpotent and non-zero: no harmonic metric exists at all";
  if (v.filtered) out["filtered"] = filtered_json(*v.filtered);
  if (v.reduced) {
    const Verdict& inner = *v.reduced->verdict;
    out["reduced"] = Json{{"surface", to_string(SurfaceKind::AffineLine)},
                          {"f", render(v.reduced->f)},
                          {"via_inversion", v.reduced->via_inversion},
                          {"verdict", verdict_json(inner)}};
    out["region"] = region_json(*inner.weight_region, *inner.filtered);
  } else if (v.weight_region) {
    out["region"] = region_json(*v.weight_region, *v.filtered);
  }
  if (v.canonical_weights) out["canonical_weights"] = weights_json(*v.canonical_weights, *v.filtered);
  if (v.canonical_degrees) out["degrees_at_canonical"] = degrees_json(*v.canonical_degrees);
  if (v.construction)
    out["construction"] = Json{{"b", v.construction->b},
                               {"a", render(v.construction->a)},
                               {"via_inversion", v.construction->via_inversion}};
  return out;
}

inline Json log_json(const VerificationLog& log) {
  Json out = Json::array();
  for (const auto& e : log.entries()) {
    Json entry{{"name", e.name}, {"status", e.holds ? "pass" : "fail"}, {"required", e.required}};
    if (!e.residual.empty()) entry["residual"] = e.residual;
    if (!e.note.empty()) entry["note"] = e.note;
    out.push_back(std::move(entry));
  }
  return out;
}

/// The verdict whose weight region describes the job (the reduced one for
/// Reduction), if any.
inline const Verdict* region_owner(const Verdict& v) {
  if (v.reduced) return v.reduced->verdict.get();
  if (v.weight_region) return &v;
  return nullptr;
}

inline Json sample_region(const Verdict& v, const JobOptions& opt, VerificationLog& log) {
  Json points = Json::array();
  const Verdict* owner = region_owner(v);
  if (opt.region_samples == 0 || owner == nullptr) return points;
  const FilteredSpec& spec = *owner->filtered;
  std::mt19937_64 rng(opt.seed);
  bool all_hold = true;
  for (std::uint64_t k = 0; k < opt.region_samples; ++k) {
    const WeightAssignment w = sample_region_point(spec, *owner->weight_region, rng);
    const bool good = check_good(spec, w).holds;
    const bool perfect = check_perfect(spec, w).holds;
    const bool stable = check_stable(spec, w);
    all_hold = all_hold && good && perfect && stable;
    points.push_back(Json{{"weights", weights_json(w, spec)},
                          {"good", good},
                          {"perfect", perfect},
                          {"stable", stable},
                          {"degrees", degrees_json(degrees(spec, w))}});
  }
  log.record("region samples are good, perfect and stable", all_hold, "",
             std::to_string(opt.region_samples) + " points from seed " + std::to_string(opt.seed));
  return points;
}

inline void run_suites(const Verdict& v, VerificationLog& log) {
  const LaurentPoly& f = *v.classification.f;
  log.append(verify_jordan_frame(f));
  log.append(verify_frame_identities(f, v.surface));
  if (v.reduced) {
    const LaurentPoly& g = v.reduced->f;
    VerificationLog inner = verify_jordan_frame(g);
    inner.append(verify_frame_identities(g, SurfaceKind::AffineLine));
    for (auto e : inner.entries()) {
      e.name = "reduced: " + e.name;
      if (e.required)
        log.record(e.name, e.holds, e.residual, e.note);
      else
        log.record_informational(e.name, e.holds, e.residual, e.note);
    }
  }
  if (v.construction) log.append(verify_special_construction(v.construction->b, v.construction->a));
}

}  // namespace detail

inline JobSpec parse_job(const Json& j, const OptionOverrides& overrides = {}) {
  using detail::malformed;
  if (!j.is_object()) malformed("a job must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "surface" && key != "f" && key != "q2" && key != "q3" && key != "options")
      malformed("unknown job key \"" + key + "\"");
  JobSpec spec;
  spec.echo = j;
  if (!j.contains("surface") || !j["surface"].is_string()) malformed("surface is required");
  const std::string surface = j["surface"].get<std::string>();
  if (surface == "affine_line")
    spec.input.surface = SurfaceKind::AffineLine;
  else if (surface == "punctured_line")
    spec.input.surface = SurfaceKind::PuncturedLine;
  else
    malformed("surface must be \"affine_line\" or \"punctured_line\"");

  const bool has_f = j.contains("f");
  const bool has_q = j.contains("q2") || j.contains("q3");
  if (has_f == has_q) malformed("give exactly one of f, or q2 and q3");
  if (has_f) {
    spec.input.payload = detail::parse_term_list(j["f"], "f");
  } else {
    if (!j.contains("q2") || !j.contains("q3")) malformed("q2 and q3 must be given together");
    spec.input.payload = CoefficientPair{detail::parse_term_list(j["q2"], "q2"), detail::parse_term_list(j["q3"], "q3")};
  }

  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) malformed("options must be an object");
    for (const auto& [key, value] : o.items()) {
      if (key == "verify_identities") {
        if (!value.is_boolean()) malformed("verify_identities must be a boolean");
        spec.options.verify_identities = value.get<bool>();
      } else if (key == "region_samples") {
        spec.options.region_samples = detail::parse_unsigned(value, key);
      } else if (key == "seed") {
        spec.options.seed = detail::parse_unsigned(value, key);
      } else {
        malformed("unknown option \"" + key + "\"");
      }
    }
  }
  spec.options.verify_identities = spec.options.verify_identities || overrides.verify_identities;
  if (overrides.region_samples) spec.options.region_samples = *overrides.region_samples;
  if (overrides.seed) spec.options.seed = *overrides.seed;
  validate_payload(spec.input);
  return spec;
}

inline ExitCode exit_code_for(Existence e) { return e == Existence::No ? ExitCode::No : ExitCode::Yes; }

/// Throws Error on bad input or a violated identity.
inline JobResult run_job(const JobSpec& spec) {
  const SpectralClassification cls = classify_spectral(spec.input);
  const Verdict v = verdict_for_classification(spec.input.surface, cls);

  VerificationLog log = v.log;
  if (cls.sheets == 2) {
    log.append(orthogonalization_log(*cls.f));
    if (spec.options.verify_identities) detail::run_suites(v, log);
  }
  Json samples = detail::sample_region(v, spec.options, log);
  log.throw_if_violated();

  Json classification;
  classification["surface"] = to_string(spec.input.surface);
  classification["sheets"] = cls.sheets;
  if (cls.f) {
    classification["f"] = render(*cls.f);
    classification["f_terms"] = detail::term_list(*cls.f);
  }
  if (cls.lambda1) classification["lambda1"] = render(*cls.lambda1);
  if (cls.lambda2) classification["lambda2"] = render(*cls.lambda2);

  JobResult out;
  out.exit = exit_code_for(v.exists);
  out.report["classification"] = classification;
  out.report["verdict"] = detail::verdict_json(v);
  out.report["region_samples"] = samples;
  out.report["verification"] = detail::log_json(log);
  out.report["provenance"] = Json{{"artifact", kArtifactName},
                                  {"version", kVersion},
                                  {"input", spec.echo},
                                  {"options",
                                   Json{{"verify_identities", spec.options.verify_identities},
                                        {"region_samples", spec.options.region_samples},
                                        {"seed", spec.options.seed}}},
                                  {"seed", spec.options.seed}};
  out.report["exit_code"] = static_cast<int>(out.exit);
  return out;
}

inline JobResult error_result(const Json& echo, const Error& e) {
  JobResult out;
  out.exit = e.is_input_error() ? ExitCode::InputError : ExitCode::IdentityViolation;
  Json err{{"code", to_string(e.code())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["offset"] = pe->offset();
    err["expected"] = pe->expected();
  }
  out.report["error"] = err;
  out.report["provenance"] = Json{{"artifact", kArtifactName}, {"version", kVersion}, {"input", echo}};
  out.report["exit_code"] = static_cast<int>(out.exit);
  return out;
}

/// Parses and runs one job object, turning library errors into error reports.
inline JobResult run_job_document(const Json& job, const OptionOverrides& overrides = {}) {
  try {
    return run_job(parse_job(job, overrides));
  } catch (const Error& e) {
    return error_result(job, e);
  }
}

/// Job arrays report the most severe exit code among their entries
/// (identity violation > input error > No > Yes).
inline ExitCode combine(ExitCode a, ExitCode b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

/// Runs a job or a job array.  Array entries run concurrently and are
/// reported in input order.
inline JobResult run_document(const Json& doc, const OptionOverrides& overrides = {}) {
  if (!doc.is_array()) return run_job_document(doc, overrides);
  std::vector<std::future<JobResult>> pending;
  for (const auto& job : doc)
    pending.push_back(std::async(std::launch::async, [&job, &overrides] { return run_job_document(job, overrides); }));
  JobResult out;
  out.report = Json::array();
  for (auto& f : pending) {
    JobResult r = f.get();
    out.exit = combine(out.exit, r.exit);
    out.report.push_back(std::move(r.report));
  }
  return out;
}

/// Parses document text and runs it; malformed JSON yields an input-error report.
inline JobResult run_document_text(const std::string& text, const OptionOverrides& overrides = {}) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    JobResult out;
    out.exit = ExitCode::InputError;
    out.report["error"] = Json{{"code", to_string(ErrorCode::MalformedInput)}, {"message", e.what()}};
    out.report["exit_code"] = static_cast<int>(out.exit);
    return out;
  }
  return run_document(doc, overrides);
}

inline std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace hitchin3
