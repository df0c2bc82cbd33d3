#pragma once

#include <json.hpp>
#include <string>

#include "aztec/oracle.hpp"
#include "aztec/partitions.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

// {"rank": N, "colors": k, "tilings": [[{"u", "v", "o": "h"|"v"}, ...], ...]}
// Dominoes are written sorted by (color, v, u); any order is read.
nlohmann::json ktiling_to_json(const KTiling& kt);
KTiling ktiling_from_json(const nlohmann::json& j);

std::string write_dump(const KTiling& kt);
KTiling read_dump(const std::string& text);

// Rationals as decimal strings; each entry carries its tiling in the dump format.
nlohmann::json distribution_to_json(const ExactDistribution& dist);

// Half-integers written as their doubles, so every entry is odd.
nlohmann::json array_to_json(const ColoredParticleArray& a);
ColoredParticleArray array_from_json(const nlohmann::json& j);

}  // namespace aztec
