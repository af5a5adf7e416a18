#pragma once

#include <string>
#include <string_view>

#include "strata/eval/experiment.hpp"

namespace strata::eval {

/// JSON documents read by the command line. Every field is optional and
/// falls back to the library default.
scene::GenConfig load_gen_config(std::string_view text);
std::string save_gen_config(const scene::GenConfig& cfg);

spatial::Tolerances load_tolerances(std::string_view text);
std::string save_tolerances(const spatial::Tolerances& tol);

/// {"settings": [...], "trials", "foa": "both|on|off", "master_seed",
///  "tolerances": {...}, "rules": "<rule text>", "K", "seed_policy":
///  "largest_container|largest_any", "neighbourhood": "local|any", "threads"}
ExperimentConfig load_experiment_config(std::string_view text);

}  // namespace strata::eval
