#include "strata/spatial/extract.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace strata::spatial {

std::string geometry_tag(const scene::Scene& scene) { return "geom:" + scene.scene_id; }

void register_vocabulary(kg::KnowledgeGraph& graph) {
  for (Relation r : kAllRelations) graph.register_relation(std::string(to_string(r)), symmetry_of(r));
}

bool floating(std::size_t b, const scene::Scene& scene, const Tolerances& tol) {
  const Rect& rb = scene.rects[b];
  const double gap = tol.tau_gap * scene.height;
  for (std::size_t c = 0; c < scene.rects.size(); ++c) {
    if (c != b && on_top_of(rb, scene.rects[c], tol, scene.height)) return false;
  }
  for (std::size_t a = 0; a < scene.rects.size(); ++a) {
    if (a == b) continue;
    const Rect& ra = scene.rects[a];
    if (contains(ra, rb, tol) && !(ra.bottom() - rb.bottom() > gap)) return false;
  }
  return true;
}

namespace {

// Sweep along one axis: every pair whose closed intervals, widened by
// `margin`, intersect.
template <typename Lo, typename Hi>
void sweep(const std::vector<Rect>& rects, double margin, Lo lo, Hi hi,
           std::set<std::pair<std::size_t, std::size_t>>& out) {
  std::vector<std::size_t> order(rects.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_pair(lo(rects[a]), a) < std::make_pair(lo(rects[b]), b);
  });
  std::vector<std::size_t> active;
  for (std::size_t idx : order) {
    const double start = lo(rects[idx]) - margin;
    std::erase_if(active, [&](std::size_t a) { return hi(rects[a]) + margin < start; });
    for (std::size_t a : active) out.emplace(std::min(a, idx), std::max(a, idx));
    active.push_back(idx);
  }
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const scene::Scene& scene,
                                                                  const Tolerances& tol) {
  const auto& rects = scene.rects;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!(tol.min_overlap > 0.0)) {
    for (std::size_t i = 0; i < rects.size(); ++i) {
      for (std::size_t j = i + 1; j < rects.size(); ++j) out.emplace_back(i, j);
    }
    return out;
  }
  double margin = 0.0;
  for (const auto& r : rects) margin = std::max(margin, tol.eps_contain * std::min(r.w, r.h));
  margin = margin * (1.0 + 1e-9) + 1e-9;

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  sweep(rects, margin, [](const Rect& r) { return r.left(); },
        [](const Rect& r) { return r.right(); }, pairs);
  sweep(rects, margin, [](const Rect& r) { return r.top(); },
        [](const Rect& r) { return r.bottom(); }, pairs);
  out.assign(pairs.begin(), pairs.end());
  return out;
}

kg::KnowledgeGraph extract_relations(const scene::Scene& scene, const Tolerances& tol) {
  tol.check();
  kg::KnowledgeGraph graph(kg::GraphOptions{.strict_levels = true});
  register_vocabulary(graph);
  const kg::NodeId void_node =
      graph.add_node(kg::Level::l1(), kg::NodeKind::Concept, std::string(kVoidNode));

  const auto& rects = scene.rects;
  std::vector<std::size_t> by_id(rects.size());
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(),
            [&](std::size_t a, std::size_t b) { return rects[a].id < rects[b].id; });
  std::vector<kg::NodeId> node_of(rects.size());
  for (std::size_t i : by_id) {
    const Rect& r = rects[i];
    const auto d = scene::derived(r);
    node_of[i] = graph.add_node(kg::Level::l1(), kg::NodeKind::Percept, r.id,
                                {{"x", r.x},
                                 {"y", r.y},
                                 {"cx", d.center.x},
                                 {"cy", d.center.y},
                                 {"w", r.w},
                                 {"h", r.h},
                                 {"area", d.area},
                                 {"circumference", d.circumference}});
  }

  // (relation, src rect, dst rect); dst == npos marks the unary form.
  constexpr std::size_t kVoid = static_cast<std::size_t>(-1);
  std::vector<std::tuple<Relation, std::size_t, std::size_t>> found;
  auto evaluate = [&](std::size_t i, std::size_t j) {
    const Rect& a = rects[i];
    const Rect& b = rects[j];
    if (contains(a, b, tol)) found.emplace_back(Relation::contains, i, j);
    if (inside(a, b, tol)) found.emplace_back(Relation::inside, i, j);
    if (aligned_h(a, b, tol)) found.emplace_back(Relation::aligned_h, i, j);
    if (aligned_v(a, b, tol)) found.emplace_back(Relation::aligned_v, i, j);
    if (above(a, b, tol)) found.emplace_back(Relation::above, i, j);
    if (below(a, b, tol)) found.emplace_back(Relation::below, i, j);
    if (on_top_of(a, b, tol, scene.height)) found.emplace_back(Relation::on_top_of, i, j);
    if (under(a, b, tol, scene.height)) found.emplace_back(Relation::under, i, j);
    const Lateral lat = lateral_relations(a, b, tol);
    if (lat.on_left_of) found.emplace_back(Relation::on_left_of, i, j);
    if (lat.on_right_of) found.emplace_back(Relation::on_right_of, i, j);
  };
  for (auto [i, j] : candidate_pairs(scene, tol)) {
    evaluate(i, j);
    evaluate(j, i);
  }

  // floating from the pairwise results: supported by nothing, and no
  // container's bottom within the gap tolerance.
  std::vector<bool> supported(rects.size(), false);
  const double gap = tol.tau_gap * scene.height;
  for (const auto& [rel, i, j] : found) {
    if (rel == Relation::on_top_of) supported[i] = true;
    if (rel == Relation::contains && !(rects[i].bottom() - rects[j].bottom() > gap)) {
      supported[j] = true;
    }
  }
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (!supported[i]) found.emplace_back(Relation::floating, i, kVoid);
  }

  auto name = [&](std::size_t i) -> const std::string& {
    static const std::string v(kVoidNode);
    return i == kVoid ? v : rects[i].id;
  };
  std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
    return std::make_tuple(to_string(std::get<0>(x)), std::cref(name(std::get<1>(x))),
                           std::cref(name(std::get<2>(x)))) <
           std::make_tuple(to_string(std::get<0>(y)), std::cref(name(std::get<1>(y))),
                           std::cref(name(std::get<2>(y))));
  });
  const std::string tag = geometry_tag(scene);
  for (const auto& [rel, i, j] : found) {
    graph.assert_relation(node_of[i], to_string(rel), j == kVoid ? void_node : node_of[j],
                          symmetry_of(rel), kGeometryTruth, tag);
  }
  return graph;
}

}  // namespace strata::spatial
