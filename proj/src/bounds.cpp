#include "supercon/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace supercon {

namespace {

void require_two_qubit(const SuperpositionSpec& spec) {
  if (spec.phi.dim_a() != 2 || spec.phi.dim_b() != 2)
    throw Error(ErrorCode::NotTwoQubit, "qubit bounds need 2x2 components");
}

void require_degree(const RegimeClassification& cls, Regime needed, const char* what) {
  if (static_cast<int>(cls.regime) > static_cast<int>(needed)) {
    std::ostringstream msg;
    msg << what << " needs a " << to_string(needed) << " pair, got " << to_string(cls.regime)
        << " (|<phi|varphi>| = " << cls.overlap_abs << ", tol " << cls.tol << ")";
    throw Error(ErrorCode::RegimeViolation, msg.str());
  }
}

void require_nondegenerate(const SpecSummary& s) {
  if (s.degenerate())
    throw Error(ErrorCode::DegenerateWeight,
                "alpha or beta is zero; the superposition is a single component");
}

BoundTerms finish(double upper, double lower_raw, double delta) {
  return BoundTerms{upper, std::max(0.0, lower_raw), lower_raw, delta};
}

// |b/a| C(varphi) and |a/b| C(phi); the smaller is the qudit lower bound's delta.
double qudit_delta(const SpecSummary& s) {
  const double b_over_a = std::sqrt(s.w_varphi / s.w_phi);
  const double a_over_b = std::sqrt(s.w_phi / s.w_varphi);
  return std::min(b_over_a * s.c_varphi, a_over_b * s.c_phi);
}

std::string describe(const RegimeClassification& cls) {
  std::ostringstream msg;
  msg.precision(6);
  msg << to_string(cls.regime) << " (|<phi|varphi>| = " << cls.overlap_abs
      << ", Tr(rhoA rhoA') = " << cls.trace_a << ", Tr(rhoB rhoB') = " << cls.trace_b << ")";
  return msg.str();
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Biorthogonal: return "biorthogonal";
    case Regime::Orthogonal: return "orthogonal";
    case Regime::General: return "general";
  }
  return "unknown";
}

std::optional<Regime> parse_regime(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "biorthogonal") return Regime::Biorthogonal;
  if (lower == "orthogonal") return Regime::Orthogonal;
  if (lower == "general") return Regime::General;
  return std::nullopt;
}

RegimeClassification classify_pair(const PureState& phi, const PureState& varphi, double tol) {
  const double overlap = std::abs(inner_product(phi, varphi));
  const Matrix ra = reduced_density(phi, Side::A).matrix() * reduced_density(varphi, Side::A).matrix();
  const Matrix rb = reduced_density(phi, Side::B).matrix() * reduced_density(varphi, Side::B).matrix();
  const double ta = std::abs(ra.trace());
  const double tb = std::abs(rb.trace());

  Regime r = Regime::General;
  if (ta <= tol && tb <= tol)
    r = Regime::Biorthogonal;
  else if (overlap <= tol)
    r = Regime::Orthogonal;
  return RegimeClassification{r, tol, overlap, ta, tb};
}

double SpecSummary::abs_ab() const { return std::sqrt(w_phi * w_varphi); }

SpecSummary summarize(const SuperpositionSpec& spec) {
  return SpecSummary{std::norm(spec.alpha), std::norm(spec.beta), i_concurrence(spec.phi),
                     i_concurrence(spec.varphi), std::abs(inner_product(spec.phi, spec.varphi))};
}

namespace formula {

BoundTerms qubit_orthogonal(const SpecSummary& s) {
  const double delta = std::max(s.c_phi, s.c_varphi);
  const double cross = 2.0 * s.abs_ab() * std::sqrt(std::max(0.0, 1.0 - delta * delta));
  const double mean = s.w_phi * s.c_phi + s.w_varphi * s.c_varphi;
  const double diff = std::abs(s.w_phi * s.c_phi - s.w_varphi * s.c_varphi);
  return finish(mean + cross, diff - cross, delta);
}

BoundTerms qubit_general(const SpecSummary& s) {
  const double delta =
      std::max(std::abs(s.c_phi - s.overlap_abs), std::abs(s.c_varphi - s.overlap_abs));
  if (delta > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "delta = " << delta << " > 1";
    throw Error(ErrorCode::DeltaOutOfRange, msg.str());
  }
  const double cross = 2.0 * s.abs_ab() * std::sqrt(std::max(0.0, 1.0 - delta * delta));
  const double mean = s.w_phi * s.c_phi + s.w_varphi * s.c_varphi;
  const double diff = std::abs(s.w_phi * s.c_phi - s.w_varphi * s.c_varphi);
  return finish(mean + cross, diff - cross, delta);
}

BoundTerms qudit_orthogonal(const SpecSummary& s) {
  require_nondegenerate(s);
  const double delta = qudit_delta(s);
  const double ab2 = 2.0 * s.abs_ab();
  const double mean = s.w_phi * s.c_phi + s.w_varphi * s.c_varphi;
  const double diff = std::abs(s.w_phi * s.c_phi - s.w_varphi * s.c_varphi);
  return finish(mean + ab2, diff - ab2 * (1.0 + delta), delta);
}

BoundTerms qudit_general(const SpecSummary& s) {
  require_nondegenerate(s);
  const double delta = qudit_delta(s);
  const double cap = std::sqrt(1.0 + s.overlap_abs * s.overlap_abs);
  const double ab2 = 2.0 * s.abs_ab();
  const double mean = s.w_phi * s.c_phi + s.w_varphi * s.c_varphi;
  const double diff = std::abs(s.w_phi * s.c_phi - s.w_varphi * s.c_varphi);
  return finish(mean + ab2 * cap, diff - ab2 * (cap + delta), delta);
}

double biorthogonal_exact(const SpecSummary& s) {
  const double a4 = s.w_phi * s.w_phi;
  const double b4 = s.w_varphi * s.w_varphi;
  return std::sqrt(a4 * s.c_phi * s.c_phi + b4 * s.c_varphi * s.c_varphi +
                   4.0 * s.w_phi * s.w_varphi);
}

bool lower_useful(const SpecSummary& s) {
  require_nondegenerate(s);
  const double r = std::sqrt(s.w_varphi / s.w_phi);  // |b/a|
  const double q = 1.0 / r;                          // |a/b|
  return s.c_phi > 3.0 * r * r * s.c_varphi + 2.0 * r ||
         s.c_varphi > 3.0 * q * q * s.c_phi + 2.0 * q;
}

double conjectured_lower(const SpecSummary& s) {
  return std::abs(s.w_phi * s.c_phi - s.w_varphi * s.c_varphi) - 2.0 * s.abs_ab();
}

}  // namespace formula

double qubit_upper_orth(const SuperpositionSpec& spec, double tol) {
  require_two_qubit(spec);
  require_degree(classify_pair(spec.phi, spec.varphi, tol), Regime::Orthogonal, "qubit_upper_orth");
  return formula::qubit_orthogonal(summarize(spec)).upper;
}

double qubit_lower_orth(const SuperpositionSpec& spec, double tol) {
  require_two_qubit(spec);
  require_degree(classify_pair(spec.phi, spec.varphi, tol), Regime::Orthogonal, "qubit_lower_orth");
  return formula::qubit_orthogonal(summarize(spec)).lower;
}

BoundTerms qubit_general_bounds(const SuperpositionSpec& spec) {
  require_two_qubit(spec);
  return formula::qubit_general(summarize(spec));
}

double exact_biorthogonal(const SuperpositionSpec& spec, double tol) {
  require_degree(classify_pair(spec.phi, spec.varphi, tol), Regime::Biorthogonal,
                 "exact_biorthogonal");
  return formula::biorthogonal_exact(summarize(spec));
}

double qudit_upper_orth(const SuperpositionSpec& spec, double tol) {
  require_degree(classify_pair(spec.phi, spec.varphi, tol), Regime::Orthogonal, "qudit_upper_orth");
  const SpecSummary s = summarize(spec);
  return s.w_phi * s.c_phi + s.w_varphi * s.c_varphi + 2.0 * s.abs_ab();
}

double qudit_lower_orth(const SuperpositionSpec& spec, double tol) {
  require_degree(classify_pair(spec.phi, spec.varphi, tol), Regime::Orthogonal, "qudit_lower_orth");
  return formula::qudit_orthogonal(summarize(spec)).lower;
}

BoundTerms qudit_general_bounds(const SuperpositionSpec& spec) {
  return formula::qudit_general(summarize(spec));
}

bool lower_bound_useful(const SuperpositionSpec& spec, double tol) {
  require_degree(classify_pair(spec.phi, spec.varphi, tol), Regime::Orthogonal,
                 "lower_bound_useful");
  return formula::lower_useful(summarize(spec));
}

BoundReport evaluate(const SuperpositionSpec& spec, const EvaluateOptions& options) {
  if (!options.scale.is_unit())
    throw Error(ErrorCode::OutOfRange, "superposition bounds assume inverter scale nu = 1");

  const RegimeClassification cls = classify_pair(spec.phi, spec.varphi, options.tol);
  const Regime used = options.regime_override.value_or(cls.regime);
  // An override may only be trusted if it does not claim more structure than the pair has.
  const bool premise_holds = static_cast<int>(used) >= static_cast<int>(cls.regime);

  BoundReport r;
  r.regime = used;
  r.classified_regime = cls.regime;
  r.regime_overridden = options.regime_override.has_value();
  r.regime_tol = options.tol;
  r.overlap = inner_product(spec.phi, spec.varphi);

  const Superposition sup = superpose(spec);
  r.norm_squared = sup.norm_squared;
  r.exact_concurrence = i_concurrence(normalize(sup.vector).first);
  r.bounded_value = r.norm_squared * r.exact_concurrence;

  const SpecSummary s = summarize(spec);
  r.c_phi = s.c_phi;
  r.c_varphi = s.c_varphi;
  if (used == Regime::Biorthogonal) r.exact_formula_value = formula::biorthogonal_exact(s);

  const bool two_qubit = spec.phi.dim_a() == 2 && spec.phi.dim_b() == 2;
  if (s.degenerate()) {
    const double survivor = s.w_phi == 0.0 ? s.c_varphi : s.c_phi;
    r.upper = r.lower = r.lower_raw = survivor;
    r.delta = 0.0;
    r.bound_source = "degenerate_weight";
    r.warnings.emplace_back("alpha or beta is zero: bounds skipped, reporting the surviving component");
  } else {
    const bool orthogonal = used != Regime::General;
    r.qudit_bounds = orthogonal ? formula::qudit_orthogonal(s) : formula::qudit_general(s);
    if (two_qubit) r.qubit_bounds = orthogonal ? formula::qubit_orthogonal(s) : formula::qubit_general(s);
    if (orthogonal) {
      r.lower_useful = formula::lower_useful(s);
      r.conjectured_lower = formula::conjectured_lower(s);
    }
    const BoundTerms& primary = r.qubit_bounds ? *r.qubit_bounds : *r.qudit_bounds;
    r.upper = primary.upper;
    r.lower = primary.lower;
    r.lower_raw = primary.lower_raw;
    r.delta = primary.delta;
    r.bound_source = std::string(two_qubit ? "qubit_" : "qudit_") + (orthogonal ? "orthogonal" : "general");
  }
  r.upper_slack = r.upper - r.bounded_value;
  r.lower_slack = r.bounded_value - r.lower;

  if (r.regime_overridden && !premise_holds)
    r.warnings.push_back("regime override " + std::string(to_string(used)) +
                         " is stronger than the classified regime " + describe(cls));

  std::vector<std::string> failures;
  auto check = [&](const char* label, const BoundTerms& t) {
    if (t.upper + kSanityTolerance < r.bounded_value || r.bounded_value + kSanityTolerance < t.lower) {
      std::ostringstream msg;
      msg.precision(17);
      msg << label << " bounds [" << t.lower << ", " << t.upper << "] miss " << r.bounded_value;
      failures.push_back(msg.str());
    }
  };
  if (r.qubit_bounds) check("qubit", *r.qubit_bounds);
  if (r.qudit_bounds) check("qudit", *r.qudit_bounds);
  if (r.exact_formula_value &&
      std::abs(*r.exact_formula_value - r.exact_concurrence) > kSanityTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "biorthogonal closed form " << *r.exact_formula_value << " != direct "
        << r.exact_concurrence;
    failures.push_back(msg.str());
  }
  if (!failures.empty()) {
    if (premise_holds && options.enforce_sanity) throw Error(ErrorCode::SanityFailure, failures.front());
    for (auto& f : failures) r.warnings.push_back("bound check: " + f);
  }
  return r;
}

}  // namespace supercon
