#pragma once

// Random pure states per regime, named fixture states, and the seeded
// verification campaign that checks the superposition bounds statistically.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "supercon/bounds.hpp"
#include "supercon/tensor.hpp"

namespace supercon {

using Rng = std::mt19937_64;

/// Generator for one trial of a campaign. Depends only on (seed, trial), so
/// a campaign's draws do not depend on execution order or thread count.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Normalized vector of independent standard complex Gaussians.
PureState haar_state(Dims dims, Rng& rng);

/// Haar-distributed n x n unitary (QR of a complex Ginibre matrix with the
/// phases of R's diagonal absorbed into Q).
Matrix haar_unitary(std::size_t n, Rng& rng);

/// Two unit states with |<phi|varphi>| <= 1e-12 (Gram-Schmidt on two draws).
std::pair<PureState, PureState> orthogonal_pair(Dims dims, Rng& rng);

/// phi supported on the block [0, split_a) x [0, split_b), varphi on the
/// complementary block [split_a, dim_a) x [split_b, dim_b). Throws InvalidSplit.
std::pair<PureState, PureState> biorthogonal_pair(Dims dims, std::size_t split_a,
                                                  std::size_t split_b, Rng& rng);

/// Non-orthogonal pair: varphi mixes a phase-rotated copy of phi with a
/// fresh draw, so |<phi|varphi>| spreads over (0, 1).
std::pair<PureState, PureState> general_pair(Dims dims, Rng& rng, double min_overlap = 1e-10);

enum class WeightSampling { RealGrid, ComplexRandom };

std::string_view to_string(WeightSampling w);
std::optional<WeightSampling> parse_weight_sampling(std::string_view name);

/// Points of the real weight grid: |alpha|^2 = k / 100, k = 1..99.
inline constexpr int kWeightGridPoints = 99;

/// RealGrid: real alpha, beta with alpha^2 drawn from the 99-point grid.
/// ComplexRandom: |alpha|^2 uniform in (0, 1), independent uniform phases.
std::pair<Complex, Complex> draw_weights(WeightSampling mode, Rng& rng);

using Fixture = std::variant<PureState, std::pair<PureState, PureState>>;

/// Named states: fig1_pair, bell_plus, bell_minus, ket01, fig2_pair.
/// fig1_pair is renormalized from its 3-decimal amplitudes.
/// Throws UnknownFixture.
Fixture named_fixture(std::string_view name);
std::vector<std::string> fixture_names();
PureState fixture_state(std::string_view name);
std::pair<PureState, PureState> fixture_pair(std::string_view name);

struct EnsembleConfig {
  std::size_t trials = 1;
  Dims dims{2, 2};
  Regime regime = Regime::Orthogonal;
  std::uint64_t seed = 42;
  WeightSampling weight_sampling = WeightSampling::RealGrid;
  double tol = kSanityTolerance;  // allowed bound violation; also the classification tolerance
  double exact_tol = 1e-12;       // biorthogonal closed form vs direct value
  unsigned jobs = 1;
};

/// Throws OutOfRange if trials < 1 or a dimension < 2.
void validate(const EnsembleConfig& config);

struct Violation {
  std::uint64_t seed;
  std::size_t trial;
  std::string digest;  // FNV-1a of the weights and amplitudes
  std::string kind;    // qubit_upper, qudit_lower, biorthogonal_exact, exception, ...
  double margin;       // how far outside the bound (positive); 0 for exceptions
  std::string detail;
};

struct VerificationSummary {
  std::size_t trials_run = 0;
  std::vector<Violation> violations;  // sorted by trial index
  double max_upper_slack = 0.0;
  double min_upper_slack = 0.0;
  double min_lower_slack = 0.0;
  double max_exact_error = 0.0;       // biorthogonal campaigns only
  std::size_t lower_useful_count = 0;
  std::size_t conjecture_violations = 0;  // delta-free lower bound, recorded only
  double wall_time = 0.0;             // seconds

  bool passed() const { return violations.empty(); }
};

/// Runs `trials` independent trials: draw a pair in the configured regime,
/// draw weights, evaluate every applicable bound and record violations
/// beyond `tol`. Identical configs give identical summaries (wall_time aside)
/// for any `jobs`.
VerificationSummary verify_ensemble(const EnsembleConfig& config);

std::string spec_digest(const SuperpositionSpec& spec);

}  // namespace supercon
