#pragma once

// JSON views of reports and campaign summaries. Field names are part of the
// command-line contract.

#include "json.hpp"
#include "supercon/bounds.hpp"
#include "supercon/ensembles.hpp"

namespace supercon {

nlohmann::json to_json(const BoundTerms& t);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const Violation& v);
/// wall_time is only emitted when `include_timing` is set, so that repeated
/// runs of the same campaign serialize identically.
nlohmann::json to_json(const VerificationSummary& s, bool include_violations = true,
                       bool include_timing = false);

}  // namespace supercon
