#include "supercon/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "supercon/concurrence.hpp"
#include "supercon/format.hpp"

namespace supercon {

std::vector<double> weight_grid(int steps, bool endpoints) {
  if (steps < 1) throw Error(ErrorCode::OutOfRange, "steps must be >= 1");
  std::vector<double> grid;
  const int first = endpoints ? 0 : 1;
  const int last = endpoints ? steps + 1 : steps;
  for (int k = first; k <= last; ++k) grid.push_back(static_cast<double>(k) / (steps + 1));
  return grid;
}

std::vector<SweepRow> sweep(const PureState& phi, const PureState& varphi,
                            const std::vector<double>& alpha_squared,
                            const EvaluateOptions& options) {
  const bool two_qubit = phi.dim_a() == 2 && phi.dim_b() == 2;
  auto eof_of = [](double c) { return eof_from_concurrence(std::clamp(c, 0.0, 1.0)); };

  std::vector<SweepRow> rows;
  rows.reserve(alpha_squared.size());
  for (double a2 : alpha_squared) {
    const SuperpositionSpec spec =
        make_spec(std::sqrt(a2), std::sqrt(1.0 - a2), phi, varphi);
    const BoundReport r = evaluate(spec, options);
    SweepRow row{a2, r.exact_concurrence, r.upper, r.lower, {}, {}, {}, r.norm_squared};
    if (two_qubit) {
      row.eof_exact = eof_of(r.exact_concurrence);
      row.eof_upper = eof_of(r.upper / r.norm_squared);
      row.eof_lower = eof_of(r.lower / r.norm_squared);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.alpha_squared) << ',' << format_double(r.exact) << ','
        << format_double(r.upper) << ',' << format_double(r.lower) << ',' << opt(r.eof_exact)
        << ',' << opt(r.eof_upper) << ',' << opt(r.eof_lower) << ','
        << format_double(r.norm_squared) << '\n';
  }
}

}  // namespace supercon
