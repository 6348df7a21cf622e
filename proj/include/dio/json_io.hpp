#pragma once

#include <string>

#include <json.hpp>

#include "dio/types.hpp"

namespace dio {

// Schema: {"status": "empty"|"lattice",
//          "reason"?: {"divisor": g, "target": d},
//          "base"?: [x, y, z], "generators"?: [[..], ..],
//          "case": "<tag>"}
nlohmann::json set_to_json(const SolutionSet3& set, const std::string& case_tag);

// Rebuilds the solution set (the case tag is reported separately and is not
// needed to reconstruct the lattice).
SolutionSet3 set_from_json(const nlohmann::json& j);

}  // namespace dio
