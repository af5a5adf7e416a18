#include "strata/scene/scene.hpp"

#include <set>

#include "strata/error.hpp"

namespace strata::scene {

DerivedAttrs derived(const Rect& r) {
  return {{r.x + r.w / 2.0, r.y + r.h / 2.0}, r.w * r.h, 2.0 * (r.w + r.h)};
}

const Rect* Scene::find(std::string_view id) const {
  for (const auto& r : rects) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

void check_invariants(const Scene& s) {
  if (!(s.width > 0.0) || !(s.height > 0.0)) {
    throw Error(ErrorCode::NonPositiveExtent, "scene '" + s.scene_id + "' has no area");
  }
  std::set<std::string_view> seen;
  for (const auto& r : s.rects) {
    if (r.id.empty()) throw Error(ErrorCode::DuplicateRectId, "empty rect id");
    if (!(r.w > 0.0) || !(r.h > 0.0)) {
      throw Error(ErrorCode::NonPositiveExtent, "rect '" + r.id + "' has w or h <= 0");
    }
    if (!seen.insert(r.id).second) {
      throw Error(ErrorCode::DuplicateRectId, "rect id '" + r.id + "' repeats");
    }
    const bool intersects =
        r.right() > 0.0 && r.left() < s.width && r.bottom() > 0.0 && r.top() < s.height;
    if (!intersects) {
      throw Error(ErrorCode::OutOfBounds, "rect '" + r.id + "' lies outside the scene");
    }
  }
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::Shelf: return "Shelf";
    case Label::Product: return "Product";
    case Label::Other: return "Other";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view s) {
  if (s == "Shelf") return Label::Shelf;
  if (s == "Product") return Label::Product;
  if (s == "Other") return Label::Other;
  return std::nullopt;
}

}  // namespace strata::scene
