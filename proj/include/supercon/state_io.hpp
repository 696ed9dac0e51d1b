#pragma once

// State file format:
//   {"dim_a": 2, "dim_b": 2, "amplitudes": [[re, im], [re, im], ...]}
// Amplitudes use the library's i * dim_b + j layout. Floats are written with
// 17 significant digits so files round-trip bit-exactly.

#include <filesystem>
#include <string>
#include <string_view>

#include "supercon/tensor.hpp"

namespace supercon {

std::string state_to_json(const PureState& s);

/// Throws ParseError on malformed JSON or schema, DimensionMismatch /
/// NotNormalized when the amplitudes violate the state invariants.
PureState state_from_json(std::string_view text);

PureState load_state(const std::filesystem::path& path);

/// Throws std::ios_base::failure when the file cannot be written.
void save_state(const std::filesystem::path& path, const PureState& s);

}  // namespace supercon
