#pragma once

// Concurrence of a superposition alpha|phi> + beta|varphi> in terms of the
// concurrences of its components.
//
// Three regimes are distinguished, each contained in the next:
//   Biorthogonal  both reduced states of phi and varphi have orthogonal
//                 supports; the concurrence has a closed form.
//   Orthogonal    <phi|varphi> = 0; upper and lower bounds on C(Psi).
//   General       arbitrary components; bounds on ||Psi||^2 C(Psi').
// Two-qubit inputs additionally get the tighter qubit bounds, whose cross
// term carries a sqrt(1 - delta^2) factor.

#include <optional>
#include <string>
#include <vector>

#include "supercon/concurrence.hpp"
#include "supercon/tensor.hpp"

namespace supercon {

inline constexpr double kRegimeTolerance = 1e-9;
inline constexpr double kSanityTolerance = 1e-9;

enum class Regime { Biorthogonal = 0, Orthogonal = 1, General = 2 };

std::string_view to_string(Regime r);
/// Accepts "biorthogonal", "orthogonal", "general" (case-insensitive).
std::optional<Regime> parse_regime(std::string_view name);

struct RegimeClassification {
  Regime regime;
  double tol;
  double overlap_abs;  // |<phi|varphi>|
  double trace_a;      // Tr(rho^A_phi rho^A_varphi)
  double trace_b;      // Tr(rho^B_phi rho^B_varphi)
};

/// Biorthogonal iff both reduced-state overlaps are <= tol, else Orthogonal
/// iff |<phi|varphi>| <= tol, else General.
RegimeClassification classify_pair(const PureState& phi, const PureState& varphi,
                                   double tol = kRegimeTolerance);

/// Scalars every bound formula is built from.
struct SpecSummary {
  double w_phi;        // |alpha|^2
  double w_varphi;     // |beta|^2
  double c_phi;
  double c_varphi;
  double overlap_abs;  // |<phi|varphi>|

  double abs_ab() const;  // |alpha beta|
  bool degenerate() const { return w_phi == 0.0 || w_varphi == 0.0; }
};

SpecSummary summarize(const SuperpositionSpec& spec);

struct BoundTerms {
  double upper;
  double lower;      // max(0, lower_raw)
  double lower_raw;  // the formula's value before clamping
  double delta;
};

/// Closed-form bound expressions on precomputed summaries. No regime checks;
/// callers are responsible for applying them where they hold.
namespace formula {

/// Qubit orthogonal pair, delta = max(C(phi), C(varphi)).
BoundTerms qubit_orthogonal(const SpecSummary& s);
/// Qubit arbitrary pair, delta = max(|C(phi) - |<phi|varphi>||, |C(varphi) - |<phi|varphi>||).
/// Throws DeltaOutOfRange if delta > 1 (cannot occur for valid states).
BoundTerms qubit_general(const SpecSummary& s);
/// Qudit orthogonal pair. Upper: w_phi C(phi) + w_varphi C(varphi) + 2|ab|.
/// Lower: |w_phi C(phi) - w_varphi C(varphi)| - 2|ab|(1 + delta),
/// delta = min(|b/a| C(varphi), |a/b| C(phi)). Throws DegenerateWeight.
BoundTerms qudit_orthogonal(const SpecSummary& s);
/// Qudit arbitrary pair: 2|ab| terms scaled by sqrt(1 + |<phi|varphi>|^2).
BoundTerms qudit_general(const SpecSummary& s);
/// sqrt(|a|^4 C^2(phi) + |b|^4 C^2(varphi) + 4 |ab|^2).
double biorthogonal_exact(const SpecSummary& s);
/// C(phi) > 3|b/a|^2 C(varphi) + 2|b/a|  or  C(varphi) > 3|a/b|^2 C(phi) + 2|a/b|.
bool lower_useful(const SpecSummary& s);
/// Orthogonal qudit lower bound with the delta correction set to zero
/// (unclamped). Conjectured, not proven; only recorded.
double conjectured_lower(const SpecSummary& s);

}  // namespace formula

// Regime-checked entry points. `tol` is the classification tolerance.
double qubit_upper_orth(const SuperpositionSpec& spec, double tol = kRegimeTolerance);
double qubit_lower_orth(const SuperpositionSpec& spec, double tol = kRegimeTolerance);
BoundTerms qubit_general_bounds(const SuperpositionSpec& spec);
double exact_biorthogonal(const SuperpositionSpec& spec, double tol = kRegimeTolerance);
double qudit_upper_orth(const SuperpositionSpec& spec, double tol = kRegimeTolerance);
double qudit_lower_orth(const SuperpositionSpec& spec, double tol = kRegimeTolerance);
BoundTerms qudit_general_bounds(const SuperpositionSpec& spec);
bool lower_bound_useful(const SuperpositionSpec& spec, double tol = kRegimeTolerance);

struct EvaluateOptions {
  double tol = kRegimeTolerance;
  std::optional<Regime> regime_override;
  /// Throw SanityFailure when the exact value escapes [lower, upper].
  bool enforce_sanity = true;
  InverterScale scale{};
};

struct BoundReport {
  Regime regime;             // regime whose formulas were applied
  Regime classified_regime;  // what classify_pair found
  bool regime_overridden = false;
  double regime_tol = kRegimeTolerance;
  Complex overlap;
  double norm_squared = 0.0;
  double exact_concurrence = 0.0;  // C(Psi') of the normalized superposition
  double bounded_value = 0.0;      // norm_squared * exact_concurrence
  std::optional<double> exact_formula_value;
  double upper = 0.0;
  double lower = 0.0;
  double lower_raw = 0.0;
  double delta = 0.0;
  std::string bound_source;
  double c_phi = 0.0;
  double c_varphi = 0.0;
  std::optional<bool> lower_useful;
  std::optional<BoundTerms> qubit_bounds;
  std::optional<BoundTerms> qudit_bounds;
  std::optional<double> conjectured_lower;
  double upper_slack = 0.0;  // upper - bounded_value
  double lower_slack = 0.0;  // bounded_value - lower
  std::vector<std::string> warnings;
};

/// Classifies the pair (unless overridden), computes the exact concurrence of
/// the normalized superposition and every bound that applies. Bounds are
/// checked against the exact value; a violation beyond kSanityTolerance
/// throws SanityFailure unless the override asserted a stronger regime than
/// the pair satisfies, in which case it is recorded as a warning.
BoundReport evaluate(const SuperpositionSpec& spec, const EvaluateOptions& options = {});

}  // namespace supercon
