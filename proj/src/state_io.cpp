#include "supercon/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "supercon/format.hpp"

namespace supercon {

using nlohmann::json;

std::string state_to_json(const PureState& s) {
  std::string out = "{\"dim_a\": " + std::to_string(s.dim_a()) +
                    ", \"dim_b\": " + std::to_string(s.dim_b()) + ", \"amplitudes\": [";
  const auto& amps = s.amplitudes();
  for (Eigen::Index k = 0; k < amps.size(); ++k) {
    if (k) out += ", ";
    out += "[" + format_double(amps[k].real()) + ", " + format_double(amps[k].imag()) + "]";
  }
  out += "]}\n";
  return out;
}

PureState state_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("dim_a") || !doc.contains("dim_b") ||
      !doc.contains("amplitudes"))
    throw Error(ErrorCode::ParseError, "state file needs dim_a, dim_b and amplitudes");
  const auto& da = doc["dim_a"];
  const auto& db = doc["dim_b"];
  if (!da.is_number_unsigned() || !db.is_number_unsigned() || da.get<std::size_t>() == 0 ||
      db.get<std::size_t>() == 0)
    throw Error(ErrorCode::ParseError, "dim_a and dim_b must be positive integers");
  const auto& arr = doc["amplitudes"];
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "amplitudes must be an array");

  Vector amps(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& a = arr[k];
    if (a.is_number()) {
      amps[static_cast<Eigen::Index>(k)] = a.get<double>();
    } else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
      amps[static_cast<Eigen::Index>(k)] = Complex(a[0].get<double>(), a[1].get<double>());
    } else {
      throw Error(ErrorCode::ParseError,
                  "amplitude " + std::to_string(k) + " must be [re, im] or a number");
    }
  }
  return make_state(Dims{da.get<std::size_t>(), db.get<std::size_t>()}, std::move(amps));
}

PureState load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read state file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return state_from_json(buf.str());
}

void save_state(const std::filesystem::path& path, const PureState& s) {
  std::ofstream out(path);
  out.exceptions(std::ios::failbit | std::ios::badbit);
  out << state_to_json(s);
}

}  // namespace supercon
