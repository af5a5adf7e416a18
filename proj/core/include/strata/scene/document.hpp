#pragma once

#include <string>
#include <string_view>

#include "strata/scene/scene.hpp"

namespace strata::scene {

/// Rects in id order, reals with six decimals.
std::string save_scene(const Scene& scene);
/// Parses and checks invariants; rects come back sorted by id.
Scene load_scene(std::string_view text);

std::string save_ground_truth(const GroundTruth& gt);
GroundTruth load_ground_truth(std::string_view text);

/// Rounds every real to the six decimals the file format keeps, so an
/// in-memory scene equals its reloaded copy.
Scene quantized(Scene scene);

}  // namespace strata::scene
