#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strata::scene {

/// Axis-aligned rectangle in image coordinates: (x, y) is the top-left
/// corner and y grows downward.
struct Rect {
  std::string id;
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double left() const { return x; }
  double right() const { return x + w; }
  double top() const { return y; }
  double bottom() const { return y + h; }
  double area() const { return w * h; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct DerivedAttrs {
  Point center;
  double area = 0.0;
  double circumference = 0.0;
};

DerivedAttrs derived(const Rect& r);

struct Scene {
  std::string scene_id;
  double width = 0.0;
  double height = 0.0;
  std::vector<Rect> rects;

  const Rect* find(std::string_view id) const;
  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Throws NonPositiveExtent, DuplicateRectId or OutOfBounds.
void check_invariants(const Scene& scene);

enum class Label : std::uint8_t { Shelf, Product, Other };

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view s);
inline constexpr Label kAllLabels[] = {Label::Shelf, Label::Product, Label::Other};

struct GroundTruth {
  std::map<std::string, Label> labels;
  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

}  // namespace strata::scene
