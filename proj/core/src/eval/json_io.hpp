#pragma once

#include <json.hpp>

#include "strata/scene/generator.hpp"
#include "strata/spatial/predicates.hpp"

namespace strata::eval::detail {

nlohmann::json to_json(const scene::GenConfig& cfg);
scene::GenConfig gen_config_from(const nlohmann::json& j, const std::string& path);
nlohmann::json to_json(const spatial::Tolerances& tol);
spatial::Tolerances tolerances_from(const nlohmann::json& j, const std::string& path);

}  // namespace strata::eval::detail
