#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "supercon/bounds.hpp"

namespace supercon {

struct SweepRow {
  double alpha_squared;
  double exact;         // C(Psi') of the normalized superposition
  double upper;         // bound on norm_squared * exact
  double lower;
  std::optional<double> eof_exact;  // 2x2 only
  std::optional<double> eof_upper;
  std::optional<double> eof_lower;
  double norm_squared;
};

/// |alpha|^2 = k / (steps + 1) for k = 1..steps, or k = 0..steps+1 when
/// `endpoints` is set.
std::vector<double> weight_grid(int steps, bool endpoints);

/// Evaluates alpha = sqrt(a2), beta = sqrt(1 - a2) at every grid point.
/// EoF columns translate the bounds on ||Psi||^2 C into bounds on C(Psi'),
/// clipped to [0, 1], and then through the monotone EoF map.
std::vector<SweepRow> sweep(const PureState& phi, const PureState& varphi,
                            const std::vector<double>& alpha_squared,
                            const EvaluateOptions& options = {});

inline constexpr const char* kSweepCsvHeader =
    "alpha_squared,exact,upper,lower,eof_exact,eof_upper,eof_lower,norm_squared";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace supercon
