#include "supercon/format.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "supercon/errors.hpp"

namespace supercon {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                           std::numeric_limits<double>::max_digits10);
  return std::string(buf, res.ptr);
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::WeightsNotNormalized: return "WeightsNotNormalized";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotTwoQubit: return "NotTwoQubit";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::RegimeViolation: return "RegimeViolation";
    case ErrorCode::DegenerateWeight: return "DegenerateWeight";
    case ErrorCode::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::SanityFailure: return "SanityFailure";
    case ErrorCode::InvalidSplit: return "InvalidSplit";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace supercon
