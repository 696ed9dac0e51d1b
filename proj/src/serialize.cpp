#include "supercon/serialize.hpp"

#include <cmath>

namespace supercon {

using nlohmann::json;

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

// JSON has no infinities; an empty campaign's extrema serialize as null.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const BoundTerms& t) {
  return {{"upper", t.upper}, {"lower", t.lower}, {"lower_raw", t.lower_raw}, {"delta", t.delta}};
}

json to_json(const BoundReport& r) {
  json j;
  j["regime"] = to_string(r.regime);
  j["classified_regime"] = to_string(r.classified_regime);
  j["regime_overridden"] = r.regime_overridden;
  j["regime_tol"] = r.regime_tol;
  j["overlap"] = complex_json(r.overlap);
  j["overlap_abs"] = std::abs(r.overlap);
  j["norm_squared"] = r.norm_squared;
  j["exact_concurrence"] = r.exact_concurrence;
  j["bounded_value"] = r.bounded_value;
  j["exact_formula_value"] = r.exact_formula_value ? json(*r.exact_formula_value) : json(nullptr);
  j["upper"] = r.upper;
  j["lower"] = r.lower;
  j["lower_raw"] = r.lower_raw;
  j["delta"] = r.delta;
  j["bound_source"] = r.bound_source;
  j["c_phi"] = r.c_phi;
  j["c_varphi"] = r.c_varphi;
  j["lower_useful"] = r.lower_useful ? json(*r.lower_useful) : json(nullptr);
  j["qubit_bounds"] = r.qubit_bounds ? to_json(*r.qubit_bounds) : json(nullptr);
  j["qudit_bounds"] = r.qudit_bounds ? to_json(*r.qudit_bounds) : json(nullptr);
  j["conjectured_lower"] = r.conjectured_lower ? json(*r.conjectured_lower) : json(nullptr);
  j["upper_slack"] = r.upper_slack;
  j["lower_slack"] = r.lower_slack;
  j["warnings"] = r.warnings;
  return j;
}

json to_json(const Violation& v) {
  return {{"seed", v.seed},   {"trial", v.trial},   {"digest", v.digest},
          {"kind", v.kind},   {"margin", v.margin}, {"detail", v.detail}};
}

json to_json(const VerificationSummary& s, bool include_violations, bool include_timing) {
  json j;
  j["passed"] = s.passed();
  j["trials_run"] = s.trials_run;
  j["violation_count"] = s.violations.size();
  if (include_violations) {
    j["violations"] = json::array();
    for (const auto& v : s.violations) j["violations"].push_back(to_json(v));
  }
  j["max_upper_slack"] = finite_or_null(s.max_upper_slack);
  j["min_upper_slack"] = finite_or_null(s.min_upper_slack);
  j["min_lower_slack"] = finite_or_null(s.min_lower_slack);
  j["max_exact_error"] = s.max_exact_error;
  j["lower_useful_count"] = s.lower_useful_count;
  j["conjecture_violations"] = s.conjecture_violations;
  if (include_timing) j["wall_time"] = s.wall_time;
  return j;
}

}  // namespace supercon
