#include "strata/scene/document.hpp"

#include <algorithm>
#include <cmath>

#include "detail/format.hpp"
#include "strata/error.hpp"

namespace strata::scene {

namespace {

double q6(double v) {
  double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

std::vector<const Rect*> sorted_rects(const Scene& s) {
  std::vector<const Rect*> out;
  for (const auto& r : s.rects) out.push_back(&r);
  std::sort(out.begin(), out.end(), [](const Rect* a, const Rect* b) { return a->id < b->id; });
  return out;
}

}  // namespace

Scene quantized(Scene s) {
  s.width = q6(s.width);
  s.height = q6(s.height);
  for (auto& r : s.rects) {
    r.x = q6(r.x);
    r.y = q6(r.y);
    r.w = q6(r.w);
    r.h = q6(r.h);
  }
  return s;
}

std::string save_scene(const Scene& s) {
  using detail::fixed6;
  std::string out = "{\n";
  out += "  \"scene_id\": " + detail::quoted(s.scene_id) + ",\n";
  out += "  \"width\": " + fixed6(s.width) + ",\n";
  out += "  \"height\": " + fixed6(s.height) + ",\n";
  out += "  \"rects\": [";
  const auto rects = sorted_rects(s);
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rect& r = *rects[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"id\": " + detail::quoted(r.id) + ", \"x\": " + fixed6(r.x) +
           ", \"y\": " + fixed6(r.y) + ", \"w\": " + fixed6(r.w) + ", \"h\": " + fixed6(r.h) + "}";
  }
  out += rects.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

Scene load_scene(std::string_view text) {
  const auto doc = detail::parse_json(text, "scene document");
  Scene s;
  s.scene_id = detail::require_string(doc, "scene_id", "");
  s.width = detail::require_number(doc, "width", "");
  s.height = detail::require_number(doc, "height", "");
  const auto& rects = detail::require_array(doc, "rects", "");
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const std::string path = "rects[" + std::to_string(i) + "]";
    Rect r;
    r.id = detail::require_string(rects[i], "id", path);
    r.x = detail::require_number(rects[i], "x", path);
    r.y = detail::require_number(rects[i], "y", path);
    r.w = detail::require_number(rects[i], "w", path);
    r.h = detail::require_number(rects[i], "h", path);
    s.rects.push_back(std::move(r));
  }
  check_invariants(s);
  std::sort(s.rects.begin(), s.rects.end(),
            [](const Rect& a, const Rect& b) { return a.id < b.id; });
  return s;
}

std::string save_ground_truth(const GroundTruth& gt) {
  std::string out = "{\n  \"labels\": {";
  bool first = true;
  for (const auto& [id, label] : gt.labels) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    " + detail::quoted(id) + ": " + detail::quoted(to_string(label));
  }
  out += gt.labels.empty() ? "}\n" : "\n  }\n";
  out += "}\n";
  return out;
}

GroundTruth load_ground_truth(std::string_view text) {
  const auto doc = detail::parse_json(text, "ground-truth document");
  const auto& labels = detail::require(doc, "labels", "");
  if (!labels.is_object()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, "labels", "expected an object");
  }
  GroundTruth gt;
  for (const auto& [id, v] : labels.items()) {
    auto label = v.is_string() ? parse_label(v.get<std::string>()) : std::nullopt;
    if (!label) {
      throw DocumentError(ErrorCode::MalformedDocument, 0, "labels." + id, "unknown label");
    }
    gt.labels.emplace(id, *label);
  }
  return gt;
}

}  // namespace strata::scene
