#include "strata/eval/render.hpp"

#include "detail/format.hpp"

namespace strata::eval {

namespace {

const char* colour(scene::Label l) {
  switch (l) {
    case scene::Label::Product: return "#2ca02c";
    case scene::Label::Shelf: return "#1f77b4";
    case scene::Label::Other: return "#7f7f7f";
  }
  return "#000000";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render(const scene::Scene& scene, const nal::Labeling& labeling,
                   const scene::GroundTruth* gt) {
  using detail::fixed6;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed6(scene.width) +
         "\" height=\"" + fixed6(scene.height) + "\" viewBox=\"0 0 " + fixed6(scene.width) + " " +
         fixed6(scene.height) + "\">\n";
  out += "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" + fixed6(scene.width) +
         "\" height=\"" + fixed6(scene.height) + "\" fill=\"#ffffff\"/>\n";
  for (const auto& r : scene.rects) {
    auto label = scene::Label::Other;
    if (auto it = labeling.claims.find(r.id); it != labeling.claims.end()) label = it->second.label;
    bool wrong = false;
    if (gt) {
      auto it = gt->labels.find(r.id);
      wrong = it != gt->labels.end() && it->second != label;
    }
    out += "  <rect class=\"outline\" data-id=\"" + escape(r.id) + "\" data-label=\"" +
           std::string(scene::to_string(label)) + "\" x=\"" + fixed6(r.x) + "\" y=\"" +
           fixed6(r.y) + "\" width=\"" + fixed6(r.w) + "\" height=\"" + fixed6(r.h) +
           "\" fill=\"none\" stroke=\"" + colour(label) + "\" stroke-width=\"2\"";
    if (wrong) out += " stroke-dasharray=\"6 3\"";
    out += "/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace strata::eval
