#include "detail/format.hpp"
#include "strata/error.hpp"
#include "strata/nal/engine.hpp"

namespace strata::nal {

std::string save_labeling(const Labeling& labeling) {
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [id, claim] : labeling.claims) {
    labels[id] = {{"label", scene::to_string(claim.label)}, {"f", claim.truth.f}, {"w", claim.truth.w}};
  }
  return detail::dump({{"labels", std::move(labels)}});
}

Labeling load_labeling(std::string_view text) {
  const auto doc = detail::parse_json(text, "labeling document");
  const auto& labels = detail::require(doc, "labels", "");
  if (!labels.is_object()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, "labels", "expected an object");
  }
  Labeling out;
  for (const auto& [id, v] : labels.items()) {
    const std::string path = "labels." + id;
    auto label = scene::parse_label(detail::require_string(v, "label", path));
    if (!label) throw DocumentError(ErrorCode::MalformedDocument, 0, path + ".label", "unknown label");
    Claim c{*label, {detail::require_number(v, "f", path), detail::require_number(v, "w", path)}};
    out.claims.emplace(id, c);
  }
  return out;
}

}  // namespace strata::nal
