#include "strata/eval/metrics.hpp"

#include "detail/format.hpp"
#include "strata/error.hpp"

namespace strata::eval {

double f1_of(double precision, double recall) {
  return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

ClassMetrics class_metrics(const Confusion& c, Label label) {
  const auto k = static_cast<std::size_t>(label);
  int predicted = 0, actual = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    predicted += c[i][k];
    actual += c[k][i];
  }
  const int tp = c[k][k];
  ClassMetrics m;
  m.precision = predicted ? static_cast<double>(tp) / predicted : 0.0;
  m.recall = actual ? static_cast<double>(tp) / actual : 0.0;
  m.f1 = f1_of(m.precision, m.recall);
  return m;
}

Metrics score(const nal::Labeling& pred, const scene::GroundTruth& gt) {
  if (pred.claims.size() != gt.labels.size()) {
    throw Error(ErrorCode::UniverseMismatch,
                std::to_string(pred.claims.size()) + " predictions for " +
                    std::to_string(gt.labels.size()) + " ground-truth rects");
  }
  Metrics m;
  auto p = pred.claims.begin();
  for (const auto& [id, label] : gt.labels) {
    if (p->first != id) throw Error(ErrorCode::UniverseMismatch, "rect '" + id + "' has no prediction");
    ++m.confusion[static_cast<std::size_t>(label)][static_cast<std::size_t>(p->second.label)];
    ++p;
  }
  m.n = static_cast<int>(gt.labels.size());
  int trace = 0;
  for (std::size_t k = 0; k < 3; ++k) trace += m.confusion[k][k];
  m.overall_accuracy = m.n ? static_cast<double>(trace) / m.n : 0.0;
  for (Label l : scene::kAllLabels) m.per_class[l] = class_metrics(m.confusion, l);
  return m;
}

std::string save_metrics(const Metrics& m) {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [l, c] : m.per_class) {
    per[std::string(scene::to_string(l))] = {
        {"precision", c.precision}, {"recall", c.recall}, {"f1", c.f1}};
  }
  nlohmann::json labels = nlohmann::json::array();
  for (Label l : scene::kAllLabels) labels.push_back(scene::to_string(l));
  return detail::dump({{"n", m.n},
                       {"overall_accuracy", m.overall_accuracy},
                       {"per_class", std::move(per)},
                       {"confusion", {{"labels", std::move(labels)}, {"matrix", m.confusion}}}});
}

Metrics load_metrics(std::string_view text) {
  const auto j = detail::parse_json(text, "metrics");
  Metrics m;
  m.n = static_cast<int>(detail::require_integer(j, "n", ""));
  m.overall_accuracy = detail::require_number(j, "overall_accuracy", "");
  const auto& per = detail::require(j, "per_class", "");
  for (Label l : scene::kAllLabels) {
    const std::string key(scene::to_string(l));
    const auto& c = detail::require(per, key, "per_class");
    const std::string path = "per_class." + key;
    m.per_class[l] = {detail::require_number(c, "precision", path),
                      detail::require_number(c, "recall", path),
                      detail::require_number(c, "f1", path)};
  }
  const auto& matrix = detail::require(detail::require(j, "confusion", ""), "matrix", "confusion");
  try {
    m.confusion = matrix.get<Confusion>();
  } catch (const nlohmann::json::exception&) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, "confusion.matrix", "expected 3x3 integers");
  }
  return m;
}

}  // namespace strata::eval
