#pragma once

#include <string>

#include "strata/nal/engine.hpp"
#include "strata/scene/scene.hpp"

namespace strata::eval {

/// SVG of the scene: one outline per rect coloured by predicted label
/// (product green, shelf blue, other grey). With ground truth, mislabeled
/// rects are dashed. Rects missing from the labeling render as other.
std::string render(const scene::Scene& scene, const nal::Labeling& labeling,
                   const scene::GroundTruth* gt = nullptr);

}  // namespace strata::eval
