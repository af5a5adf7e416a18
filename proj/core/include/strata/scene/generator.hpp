#pragma once

#include <cstdint>
#include <utility>

#include "strata/scene/scene.hpp"

namespace strata::scene {

/// Synthetic retail-shelf scene parameters. The defaults give roughly 150
/// rects: ~105 products, 16 shelves and ~29 others.
struct GenConfig {
  int n_shelves = 16;
  int products_min = 5;
  int products_max = 9;
  double stack_prob = 0.05;
  double jitter_sigma = 0.0;
  double spurious_rate = 1.8;
  double dropout_rate = 0.1;
  std::uint64_t rng_seed = 0;

  friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

/// Layout constants of recipe v1 (scene units).
struct LayoutV1 {
  static constexpr double kSceneWidth = 1600.0;
  static constexpr double kShelfPitch = 100.0;
  static constexpr double kShelfHeight = 80.0;
  static constexpr double kShelfGap = kShelfPitch - kShelfHeight;
};

/// Throws ConfigInvalid.
void check_config(const GenConfig& cfg);

/// Recipe v1:
///  1. n_shelves full-width bands of height 80 on a 100-unit pitch, with a
///     20-unit top margin.
///  2. Per shelf, U{min..max} products in equal slots; widths 55-85% of the
///     slot, heights 45-85% of the band, bottoms on the band bottom.
///  3. With stack_prob a slot holds a two-product stack instead: a shorter
///     base plus a narrower product resting on its top.
///  4. Noise: Gaussian jitter (sigma = jitter_sigma * min(w, h)) on x, y, w, h
///     of every layout rect; per shelf, floor(spurious_rate) uniformly placed
///     Other rects plus one more with probability frac(spurious_rate);
///     independent product dropout.
///  5. Rects are shuffled and renamed r000, r001, ... so ids carry no label.
/// Rect edges are snapped to a 1/64 grid, which six decimals keep exactly.
std::pair<Scene, GroundTruth> generate_scene(const GenConfig& cfg);

}  // namespace strata::scene
