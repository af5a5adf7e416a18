#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "strata/nal/engine.hpp"
#include "strata/scene/scene.hpp"

namespace strata::eval {

using scene::Label;

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

/// Row = ground truth, column = prediction, both in Label order.
using Confusion = std::array<std::array<int, 3>, 3>;

struct Metrics {
  std::map<Label, ClassMetrics> per_class;
  double overall_accuracy = 0.0;
  Confusion confusion{};
  int n = 0;
  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Harmonic mean, 0 when both are 0.
double f1_of(double precision, double recall);

ClassMetrics class_metrics(const Confusion& confusion, Label label);

/// One-vs-rest precision/recall/F1 per label and micro accuracy. Throws
/// UniverseMismatch unless both cover the same rect ids.
Metrics score(const nal::Labeling& pred, const scene::GroundTruth& gt);

std::string save_metrics(const Metrics& m);
Metrics load_metrics(std::string_view text);

}  // namespace strata::eval
