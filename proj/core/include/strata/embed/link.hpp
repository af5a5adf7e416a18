#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "strata/embed/skipgram.hpp"

namespace strata::embed {

/// y = a x + b, or x = x0 when the endpoints share an x coordinate.
struct Line {
  bool vertical = false;
  double a = 0.0;
  double b = 0.0;
  double x0 = 0.0;
  friend bool operator==(const Line&, const Line&) = default;
};

struct LinkReport {
  std::string n1;
  std::string n2;
  Line line;
  double eps_initial = 0.0;
  double eps_final = 0.0;
  double max_eps = 0.0;
  /// Member id -> quarter (1..4) of the segment its foot falls in.
  std::map<std::string, int> members;
  std::array<int, 4> quadrant_counts{};
  std::optional<double> skew_index;
  /// Growth stopped at max_eps with a quarter still empty.
  bool guard_tripped = false;
  friend bool operator==(const LinkReport&, const LinkReport&) = default;
};

/// Largest pairwise distance between vectors.
double diameter(const EmbeddingSpace& space);

/// Position of `p` relative to segment [a, b]: foot parameter t (0 at a, 1 at
/// b) and perpendicular distance.
struct Projection {
  double t = 0.0;
  double distance = 0.0;
};
Projection project(const std::array<double, 2>& a, const std::array<double, 2>& b,
                   const std::array<double, 2>& p);

/// Quarter of the segment holding foot parameter t in [0, 1]; a boundary
/// belongs to the lower quarter.
int quarter_of(double t);

/// Nodes inside the eps band of segment [n1, n2] with their foot on the
/// segment. While a quarter is empty and eps < max_eps, eps grows by gamma.
/// A negative max_eps means the embedding diameter. Throws IdenticalEndpoints,
/// NotTwoDimensional, UnknownNode.
LinkReport predict_links(const EmbeddingSpace& space, const std::string& n1, const std::string& n2,
                         double eps, double gamma, double max_eps = -1.0);

}  // namespace strata::embed
