#pragma once

#include <string>

namespace supercon {

/// Locale-independent shortest-safe rendering with 17 significant digits,
/// e.g. 0.5 -> "0.5", 1/3 -> "0.33333333333333331". NaN renders as "nan".
std::string format_double(double x);

}  // namespace supercon
