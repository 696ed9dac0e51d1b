#include "supercon/ensembles.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <mutex>
#include <thread>

namespace supercon {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vector gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[k] = Complex(re, im);
  }
  return v;
}

Complex random_phase(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

// Two random orthogonal qubit states, rounded to 3 decimals.
constexpr double kFig1Phi[4] = {-0.264, 0.528, 0.487, -0.643};
constexpr double kFig1Varphi[4] = {-0.034, 0.675, -0.734, 0.010};

PureState renormalized(const double (&amps)[4]) {
  Vector v(4);
  for (int k = 0; k < 4; ++k) v[k] = amps[k];
  return normalize(RawVector(Dims{2, 2}, v)).first;
}

PureState from_real(Dims d, std::initializer_list<double> amps) {
  std::vector<Complex> v(amps.begin(), amps.end());
  return make_state(d.a, d.b, v);
}

void fnv1a(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

struct TrialOutcome {
  std::vector<Violation> violations;
  double upper_slack = std::numeric_limits<double>::quiet_NaN();
  double lower_slack = std::numeric_limits<double>::quiet_NaN();
  double exact_error = 0.0;
  bool lower_useful = false;
  bool conjecture_violated = false;
};

std::pair<PureState, PureState> draw_pair(const EnsembleConfig& c, Rng& rng) {
  switch (c.regime) {
    case Regime::Biorthogonal: {
      std::uniform_int_distribution<std::size_t> sa(1, c.dims.a - 1);
      std::uniform_int_distribution<std::size_t> sb(1, c.dims.b - 1);
      const std::size_t split_a = sa(rng);
      const std::size_t split_b = sb(rng);
      return biorthogonal_pair(c.dims, split_a, split_b, rng);
    }
    case Regime::Orthogonal:
      return orthogonal_pair(c.dims, rng);
    case Regime::General:
      return general_pair(c.dims, rng, c.tol);
  }
  throw Error(ErrorCode::InternalError, "unknown regime");
}

TrialOutcome run_trial(const EnsembleConfig& c, std::size_t trial) {
  TrialOutcome out;
  Rng rng = trial_rng(c.seed, trial);
  auto [phi, varphi] = draw_pair(c, rng);
  auto [alpha, beta] = draw_weights(c.weight_sampling, rng);
  const SuperpositionSpec spec = make_spec(alpha, beta, std::move(phi), std::move(varphi));

  auto record = [&](std::string kind, double margin, std::string detail) {
    out.violations.push_back(
        Violation{c.seed, trial, spec_digest(spec), std::move(kind), margin, std::move(detail)});
  };

  EvaluateOptions opts;
  opts.tol = c.tol;
  opts.enforce_sanity = false;
  BoundReport r;
  try {
    r = evaluate(spec, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalError) throw;
    record("exception", 0.0, e.what());
    return out;
  }

  if (r.classified_regime != c.regime) {
    record("regime_mismatch", 0.0,
           "generated pair classified as " + std::string(to_string(r.classified_regime)));
  }
  auto check = [&](const char* prefix, const BoundTerms& t) {
    const double up = t.upper - r.bounded_value;
    const double lo = r.bounded_value - t.lower;
    if (up < -c.tol) record(std::string(prefix) + "_upper", -up, "");
    if (lo < -c.tol) record(std::string(prefix) + "_lower", -lo, "");
  };
  if (r.qubit_bounds) check("qubit", *r.qubit_bounds);
  if (r.qudit_bounds) check("qudit", *r.qudit_bounds);
  if (r.exact_formula_value) {
    out.exact_error = std::abs(*r.exact_formula_value - r.exact_concurrence);
    if (out.exact_error > c.exact_tol) record("biorthogonal_exact", out.exact_error, "");
  }
  out.upper_slack = r.upper_slack;
  out.lower_slack = r.lower_slack;
  out.lower_useful = r.lower_useful.value_or(false);
  out.conjecture_violated =
      r.conjectured_lower && r.bounded_value < *r.conjectured_lower - c.tol;
  return out;
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix64(seed ^ splitmix64(trial + 0x632be59bd9b4e019ULL)));
}

PureState haar_state(Dims dims, Rng& rng) {
  for (;;) {
    RawVector v(dims, gaussian_vector(dims.total(), rng));
    if (v.amplitudes.norm() > kZeroVectorThreshold) return normalize(v).first;
  }
}

Matrix haar_unitary(std::size_t n, Rng& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  Matrix g(m, m);
  for (Eigen::Index j = 0; j < m; ++j) g.col(j) = gaussian_vector(n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

std::pair<PureState, PureState> orthogonal_pair(Dims dims, Rng& rng) {
  if (dims.total() < 2) throw Error(ErrorCode::OutOfRange, "orthogonal_pair needs dim_a * dim_b >= 2");
  PureState phi = haar_state(dims, rng);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vector v = gaussian_vector(dims.total(), rng);
    for (int pass = 0; pass < 2; ++pass) v -= phi.amplitudes().dot(v) * phi.amplitudes();
    if (v.norm() < 1e-3) continue;
    PureState varphi = normalize(RawVector(dims, v)).first;
    if (std::abs(inner_product(phi, varphi)) <= 1e-12) return {std::move(phi), std::move(varphi)};
  }
  throw Error(ErrorCode::InternalError, "orthogonal_pair: no acceptable draw in 100 attempts");
}

std::pair<PureState, PureState> biorthogonal_pair(Dims dims, std::size_t split_a,
                                                  std::size_t split_b, Rng& rng) {
  if (split_a < 1 || split_a >= dims.a || split_b < 1 || split_b >= dims.b) {
    std::ostringstream msg;
    msg << "split (" << split_a << ", " << split_b << ") invalid for dims " << dims.a << "x"
        << dims.b;
    throw Error(ErrorCode::InvalidSplit, msg.str());
  }
  const PureState block1 = haar_state(Dims{split_a, split_b}, rng);
  const PureState block2 = haar_state(Dims{dims.a - split_a, dims.b - split_b}, rng);
  Vector phi = Vector::Zero(static_cast<Eigen::Index>(dims.total()));
  Vector varphi = phi;
  for (std::size_t i = 0; i < split_a; ++i)
    for (std::size_t j = 0; j < split_b; ++j)
      phi[static_cast<Eigen::Index>(i * dims.b + j)] = block1[i * split_b + j];
  const std::size_t rest_b = dims.b - split_b;
  for (std::size_t i = split_a; i < dims.a; ++i)
    for (std::size_t j = split_b; j < dims.b; ++j)
      varphi[static_cast<Eigen::Index>(i * dims.b + j)] = block2[(i - split_a) * rest_b + (j - split_b)];
  return {make_state(dims, std::move(phi)), make_state(dims, std::move(varphi))};
}

std::pair<PureState, PureState> general_pair(Dims dims, Rng& rng, double min_overlap) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    PureState phi = haar_state(dims, rng);
    const PureState fresh = haar_state(dims, rng);
    const double t = unit(rng);
    const Vector v = t * random_phase(rng) * phi.amplitudes() + (1.0 - t) * fresh.amplitudes();
    if (v.norm() <= 1e-6) continue;
    PureState varphi = normalize(RawVector(dims, v)).first;
    if (std::abs(inner_product(phi, varphi)) > min_overlap) return {std::move(phi), std::move(varphi)};
  }
  throw Error(ErrorCode::InternalError, "general_pair: no acceptable draw in 100 attempts");
}

std::string_view to_string(WeightSampling w) {
  return w == WeightSampling::RealGrid ? "real-grid" : "complex-random";
}

std::optional<WeightSampling> parse_weight_sampling(std::string_view name) {
  if (name == "real-grid") return WeightSampling::RealGrid;
  if (name == "complex-random") return WeightSampling::ComplexRandom;
  return std::nullopt;
}

std::pair<Complex, Complex> draw_weights(WeightSampling mode, Rng& rng) {
  if (mode == WeightSampling::RealGrid) {
    std::uniform_int_distribution<int> grid(1, kWeightGridPoints);
    const double a2 = grid(rng) / static_cast<double>(kWeightGridPoints + 1);
    return {std::sqrt(a2), std::sqrt(1.0 - a2)};
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double a2 = 0.0;
  while (a2 == 0.0) a2 = unit(rng);
  const Complex pa = random_phase(rng);
  const Complex pb = random_phase(rng);
  return {std::sqrt(a2) * pa, std::sqrt(1.0 - a2) * pb};
}

std::vector<std::string> fixture_names() {
  return {"fig1_pair", "bell_plus", "bell_minus", "ket01", "fig2_pair"};
}

Fixture named_fixture(std::string_view name) {
  const double r2 = 1.0 / std::sqrt(2.0);
  if (name == "fig1_pair") return std::pair{renormalized(kFig1Phi), renormalized(kFig1Varphi)};
  if (name == "bell_plus") return from_real({2, 2}, {r2, 0, 0, r2});
  if (name == "bell_minus") return from_real({2, 2}, {r2, 0, 0, -r2});
  if (name == "ket01") return from_real({2, 2}, {0, 1, 0, 0});
  if (name == "fig2_pair") {
    constexpr std::size_t d = 10;
    Vector uniform = Vector::Constant(d * d, Complex(1.0 / d, 0.0));
    Vector diagonal = Vector::Zero(d * d);
    for (std::size_t i = 0; i < d; ++i) diagonal[static_cast<Eigen::Index>(i * d + i)] = 1.0 / std::sqrt(double(d));
    return std::pair{make_state(Dims{d, d}, uniform), make_state(Dims{d, d}, diagonal)};
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

PureState fixture_state(std::string_view name) {
  Fixture f = named_fixture(name);
  if (auto* s = std::get_if<PureState>(&f)) return std::move(*s);
  throw Error(ErrorCode::UnknownFixture, std::string(name) + " is a pair, not a single state");
}

std::pair<PureState, PureState> fixture_pair(std::string_view name) {
  Fixture f = named_fixture(name);
  if (auto* p = std::get_if<std::pair<PureState, PureState>>(&f)) return std::move(*p);
  throw Error(ErrorCode::UnknownFixture, std::string(name) + " is a single state, not a pair");
}

std::string spec_digest(const SuperpositionSpec& spec) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv1a(h, &spec.alpha, sizeof spec.alpha);
  fnv1a(h, &spec.beta, sizeof spec.beta);
  fnv1a(h, spec.phi.amplitudes().data(), sizeof(Complex) * spec.phi.amplitudes().size());
  fnv1a(h, spec.varphi.amplitudes().data(), sizeof(Complex) * spec.varphi.amplitudes().size());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void validate(const EnsembleConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::OutOfRange, "trials must be >= 1");
  if (config.dims.a < 2 || config.dims.b < 2)
    throw Error(ErrorCode::OutOfRange, "ensemble dims must be >= 2");
  if (!(config.tol >= 0.0)) throw Error(ErrorCode::OutOfRange, "tol must be >= 0");
}

VerificationSummary verify_ensemble(const EnsembleConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  std::vector<TrialOutcome> outcomes(config.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < config.trials; t = next++) {
      try {
        outcomes[t] = run_trial(config, t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.trials;
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(config.trials)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  VerificationSummary s;
  s.trials_run = config.trials;
  s.max_upper_slack = -std::numeric_limits<double>::infinity();
  s.min_upper_slack = std::numeric_limits<double>::infinity();
  s.min_lower_slack = std::numeric_limits<double>::infinity();
  for (auto& o : outcomes) {
    for (auto& v : o.violations) s.violations.push_back(std::move(v));
    if (!std::isnan(o.upper_slack)) {
      s.max_upper_slack = std::max(s.max_upper_slack, o.upper_slack);
      s.min_upper_slack = std::min(s.min_upper_slack, o.upper_slack);
      s.min_lower_slack = std::min(s.min_lower_slack, o.lower_slack);
    }
    s.max_exact_error = std::max(s.max_exact_error, o.exact_error);
    s.lower_useful_count += o.lower_useful;
    s.conjecture_violations += o.conjecture_violated;
  }
  std::stable_sort(s.violations.begin(), s.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.trial < b.trial; });
  s.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace supercon
