#pragma once

#include <json.hpp>

#include "strength/bounds.hpp"
#include "strength/harness.hpp"
#include "strength/solver.hpp"

namespace strength {

nlohmann::json to_json(const BoundsReport& r);
/// {"value": int | "infinity", "certificate", "witness": [labels] | null, "nodes", "ms"}
nlohmann::json to_json(const StrengthResult& r);
nlohmann::json to_json(const VerificationReport& r);

} // namespace strength
