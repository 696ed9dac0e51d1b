#include "supercon/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "supercon/concurrence.hpp"
#include "supercon/ensembles.hpp"
#include "supercon/format.hpp"
#include "supercon/serialize.hpp"
#include "supercon/state_io.hpp"
#include "supercon/sweep.hpp"

namespace supercon::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 42;
// Only used for the fig1 fixture, whose amplitudes are rounded to 3 decimals.
constexpr double kFig1RegimeTolerance = 1e-3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& text) {
  auto parse_double = [&](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw Error(ErrorCode::ParseError, "cannot parse weight '" + text + "'");
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return parse_double(text);
  return {parse_double(std::string_view(text).substr(0, comma)),
          parse_double(std::string_view(text).substr(comma + 1))};
}

Regime parse_regime_or_throw(const std::string& name) {
  auto r = parse_regime(name);
  if (!r) throw Error(ErrorCode::ParseError, "unknown regime '" + name + "'");
  return *r;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SB_SEED")) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
  }
  return kDefaultSeed;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing " + path.string());
}

json state_info(const PureState& s) {
  json j;
  j["dim_a"] = s.dim_a();
  j["dim_b"] = s.dim_b();
  j["norm"] = s.amplitudes().norm();
  j["schmidt_coefficients"] = schmidt_coefficients(s);
  j["purity_a"] = purity(reduced_density(s, Side::A));
  j["i_concurrence"] = i_concurrence(s);
  if (s.dim_a() == 2 && s.dim_b() == 2) {
    const double c = concurrence_qubit(s);
    j["qubit_concurrence"] = c;
    j["eof"] = eof_from_concurrence(c);
  } else {
    j["qubit_concurrence"] = nullptr;
    j["eof"] = nullptr;
  }
  return j;
}

std::string sweep_csv(const PureState& phi, const PureState& varphi,
                      const std::vector<double>& grid, const EvaluateOptions& opts) {
  std::ostringstream csv;
  write_csv(csv, sweep(phi, varphi, grid, opts));
  return csv.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concurrence of bipartite pure states and of their superpositions"};
  app.require_subcommand(1);

  // state-info
  std::string info_file;
  auto* info = app.add_subcommand("state-info", "Schmidt coefficients and concurrences of a state file");
  info->add_option("state", info_file, "State JSON file")->required();

  // bounds
  std::string phi_file, varphi_file, alpha_text, beta_text, override_text;
  double tol = kRegimeTolerance;
  auto* bounds = app.add_subcommand("bounds", "Bound report for alpha|phi> + beta|varphi>");
  bounds->add_option("phi", phi_file, "State file for |phi>")->required();
  bounds->add_option("varphi", varphi_file, "State file for |varphi>")->required();
  bounds->add_option("--alpha", alpha_text, "Weight of |phi>: re or re,im")->required();
  bounds->add_option("--beta", beta_text, "Weight of |varphi>: re or re,im (default sqrt(1-|alpha|^2))");
  bounds->add_option("--regime-override", override_text, "biorthogonal|orthogonal|general");
  bounds->add_option("--tol", tol, "Regime classification tolerance");

  // sweep
  int steps = 99;
  std::string sweep_out;
  auto* sw = app.add_subcommand("sweep", "CSV of exact value and bounds over |alpha|^2");
  sw->add_option("phi", phi_file, "State file for |phi>")->required();
  sw->add_option("varphi", varphi_file, "State file for |varphi>")->required();
  sw->add_option("--steps", steps, "Number of interior grid points")->check(CLI::PositiveNumber);
  sw->add_option("--regime-override", override_text, "biorthogonal|orthogonal|general");
  sw->add_option("--tol", tol, "Regime classification tolerance");
  sw->add_option("--out", sweep_out, "Write CSV here instead of stdout");

  // figure
  std::string figure_name, figure_out;
  bool strict = false;
  auto* fig = app.add_subcommand("figure", "Data for the fig1 (qubit) or fig2 (d = 10) curves");
  fig->add_option("name", figure_name, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
  fig->add_option("--out", figure_out, "Output CSV path")->required();
  fig->add_option("--steps", steps, "Number of interior grid points")->check(CLI::PositiveNumber);
  fig->add_flag("--strict", strict, "fig2: use the arbitrary-pair bounds instead of the orthogonal ones");

  // verify
  std::size_t trials = 1000;
  std::vector<std::size_t> dims{2, 2};
  std::string regime_text = "orthogonal", weights_text = "real-grid", violations_out;
  std::uint64_t seed = default_seed();
  double verify_tol = kSanityTolerance;
  unsigned jobs = 1;
  bool timing = false;
  auto* ver = app.add_subcommand("verify", "Randomized campaign checking the bounds");
  ver->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  ver->add_option("--dims", dims, "Local dimensions dim_a dim_b")->expected(2);
  ver->add_option("--regime", regime_text, "biorthogonal|orthogonal|general");
  ver->add_option("--seed", seed, "Campaign seed (default: $SB_SEED or 42)");
  ver->add_option("--tol", verify_tol, "Allowed bound violation");
  ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--weights", weights_text, "real-grid|complex-random");
  ver->add_option("--violations-out", violations_out, "Write violations as JSONL here");
  ver->add_flag("--timing", timing, "Include wall_time in the summary");

  // fixture
  std::string fixture_name, out_dir = ".";
  auto* fx = app.add_subcommand("fixture", "Write a named fixture as state file(s)");
  fx->add_option("name", fixture_name, "fig1_pair|bell_plus|bell_minus|ket01|fig2_pair")->required();
  fx->add_option("--out-dir", out_dir, "Directory for the state files");

  std::vector<const char*> argv{"supercon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  auto options = [&] {
    EvaluateOptions o;
    o.tol = tol;
    if (!override_text.empty()) o.regime_override = parse_regime_or_throw(override_text);
    return o;
  };

  try {
    if (*info) {
      out << state_info(load_state(info_file)).dump(2) << '\n';
    } else if (*bounds) {
      const Complex alpha = parse_complex(alpha_text);
      const Complex beta = beta_text.empty() ? Complex(std::sqrt(std::max(0.0, 1.0 - std::norm(alpha))))
                                             : parse_complex(beta_text);
      const auto spec = make_spec(alpha, beta, load_state(phi_file), load_state(varphi_file));
      out << to_json(evaluate(spec, options())).dump(2) << '\n';
    } else if (*sw) {
      const std::string csv =
          sweep_csv(load_state(phi_file), load_state(varphi_file), weight_grid(steps, false), options());
      if (sweep_out.empty())
        out << csv;
      else
        write_file(sweep_out, csv);
    } else if (*fig) {
      EvaluateOptions o;
      o.regime_override = Regime::Orthogonal;
      const bool fig1 = figure_name == "fig1";
      if (fig1) o.tol = kFig1RegimeTolerance;
      if (!fig1 && strict) o.regime_override = Regime::General;
      const auto [phi, varphi] = fixture_pair(fig1 ? "fig1_pair" : "fig2_pair");
      write_file(figure_out, sweep_csv(phi, varphi, weight_grid(steps, true), o));
    } else if (*ver) {
      EnsembleConfig config;
      config.trials = trials;
      config.dims = Dims{dims.at(0), dims.at(1)};
      config.regime = parse_regime_or_throw(regime_text);
      config.seed = seed;
      config.tol = verify_tol;
      config.jobs = jobs;
      const auto ws = parse_weight_sampling(weights_text);
      if (!ws) throw Error(ErrorCode::ParseError, "unknown weight sampling '" + weights_text + "'");
      config.weight_sampling = *ws;
      validate(config);
      const VerificationSummary summary = verify_ensemble(config);
      out << to_json(summary, true, timing).dump(2) << '\n';
      if (!timing) err << "wall_time " << format_double(summary.wall_time) << " s\n";
      if (!violations_out.empty()) {
        std::string lines;
        for (const auto& v : summary.violations) lines += to_json(v).dump() + '\n';
        write_file(violations_out, lines);
      }
      return summary.passed() ? kOk : kViolation;
    } else if (*fx) {
      const std::filesystem::path dir(out_dir);
      const Fixture f = named_fixture(fixture_name);
      if (const auto* s = std::get_if<PureState>(&f)) {
        write_file(dir / (fixture_name + ".json"), state_to_json(*s));
        out << (dir / (fixture_name + ".json")).string() << '\n';
      } else {
        const auto& [phi, varphi] = std::get<std::pair<PureState, PureState>>(f);
        std::string stem = fixture_name.substr(0, fixture_name.rfind("_pair"));
        write_file(dir / (stem + "_phi.json"), state_to_json(phi));
        write_file(dir / (stem + "_varphi.json"), state_to_json(varphi));
        out << (dir / (stem + "_phi.json")).string() << '\n'
            << (dir / (stem + "_varphi.json")).string() << '\n';
      }
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return (e.code() == ErrorCode::SanityFailure || e.code() == ErrorCode::InternalError) ? kSanity
                                                                                          : kInput;
  }
  return kOk;
}

}  // namespace supercon::cli
