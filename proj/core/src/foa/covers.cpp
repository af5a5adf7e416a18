#include "strata/foa/covers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strata/error.hpp"
#include "strata/spatial/extract.hpp"

namespace strata::foa {

namespace {

bool local(const std::string& relation) {
  using spatial::Relation;
  const auto r = spatial::parse_relation(relation);
  return r && *r != Relation::above && *r != Relation::below && *r != Relation::aligned_v;
}

}  // namespace

void FoAConfig::check() const {
  if (K < 2) throw Error(ErrorCode::ConfigInvalid, "cover cap K must be >= 2");
}

std::vector<Cover> build_covers(const kg::KnowledgeGraph& graph, const scene::Scene& scene,
                                const FoAConfig& cfg) {
  cfg.check();
  const std::size_t n = scene.rects.size();
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(scene.rects[i].id, i);

  std::vector<std::set<std::size_t>> neighbours(n);
  std::vector<bool> container(n, false);
  for (const auto& e : graph.edges()) {
    auto s = index.find(graph.node(e.src).name);
    auto d = index.find(graph.node(e.dst).name);
    const bool rect_src = s != index.end() && graph.node(e.src).kind == kg::NodeKind::Percept;
    const bool rect_dst = d != index.end() && graph.node(e.dst).kind == kg::NodeKind::Percept;
    if (!rect_src || !rect_dst || s->second == d->second) continue;
    if (e.relation == "contains") container[s->second] = true;
    if (cfg.neighbourhood == Neighbourhood::Local && !local(e.relation)) continue;
    neighbours[s->second].insert(d->second);
    neighbours[d->second].insert(s->second);
  }

  auto larger = [&](std::size_t a, std::size_t b) {
    const double aa = scene.rects[a].area(), ab = scene.rects[b].area();
    if (aa != ab) return aa > ab;
    return scene.rects[a].id < scene.rects[b].id;
  };
  std::vector<std::size_t> by_size(n);
  for (std::size_t i = 0; i < n; ++i) by_size[i] = i;
  std::sort(by_size.begin(), by_size.end(), larger);

  std::vector<bool> seeded(n, false), covered(n, false);
  std::size_t n_covered = 0;
  std::vector<Cover> covers;
  while (n_covered < n) {
    std::size_t seed = n;
    if (cfg.seed_policy == SeedPolicy::LargestContainer) {
      for (std::size_t i : by_size) {
        if (!seeded[i] && container[i]) {
          seed = i;
          break;
        }
      }
    }
    if (seed == n) {
      for (std::size_t i : by_size) {
        if (!seeded[i]) {
          seed = i;
          break;
        }
      }
    }
    seeded[seed] = true;

    std::vector<std::size_t> nb(neighbours[seed].begin(), neighbours[seed].end());
    std::sort(nb.begin(), nb.end(), larger);
    Cover c;
    c.ordinal = covers.size();
    c.seed = scene.rects[seed].id;
    c.members.push_back(c.seed);
    std::vector<std::size_t> picked{seed};
    for (std::size_t i : nb) {
      if (c.members.size() >= cfg.K) break;
      c.members.push_back(scene.rects[i].id);
      picked.push_back(i);
    }
    for (std::size_t i : picked) {
      if (!covered[i]) {
        covered[i] = true;
        ++n_covered;
      }
    }
    covers.push_back(std::move(c));
  }
  return covers;
}

kg::KnowledgeGraph induced_subgraph(const kg::KnowledgeGraph& graph,
                                    const std::vector<std::string>& members,
                                    const std::string& tag) {
  kg::KnowledgeGraph out(graph.options());
  for (const auto& [name, info] : graph.relations()) {
    out.register_relation(name, info.symmetry, info.reflexive);
  }
  std::vector<std::string> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  std::map<kg::NodeId, kg::NodeId> remap;
  if (auto v = graph.find_node(kg::Level::l1(), kg::NodeKind::Concept, spatial::kVoidNode)) {
    remap[*v] = out.add_node(kg::Level::l1(), kg::NodeKind::Concept, std::string(spatial::kVoidNode));
  }
  for (const auto& name : sorted) {
    auto id = graph.find_node(kg::Level::l1(), kg::NodeKind::Percept, name);
    if (!id) throw Error(ErrorCode::UnknownNode, "cover member '" + name + "' is not in the graph");
    const auto& node = graph.node(*id);
    remap[*id] = out.add_node(node.level, node.kind, node.name, node.attrs);
  }
  for (const auto& e : graph.edges()) {
    auto s = remap.find(e.src);
    auto d = remap.find(e.dst);
    if (s == remap.end() || d == remap.end()) continue;
    out.assert_relation(s->second, e.relation, d->second, e.symmetry, e.truth(), tag);
  }
  return out;
}

}  // namespace strata::foa
