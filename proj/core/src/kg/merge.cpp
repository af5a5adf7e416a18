#include "strata/kg/validate.hpp"

namespace strata::kg {

KnowledgeGraph merge(const KnowledgeGraph& g1, const KnowledgeGraph& g2) {
  if (auto v = validate(g1); !v.empty()) throw MergeError("first graph is unsound", std::move(v));
  if (auto v = validate(g2); !v.empty()) throw MergeError("second graph is unsound", std::move(v));

  KnowledgeGraph out = g1;
  for (const auto& [name, info] : g2.relations()) {
    out.register_relation(name, info.symmetry, info.reflexive);
  }
  std::vector<NodeId> remap(g2.node_count());
  for (const auto& n : g2.nodes()) {
    auto existing = out.find_node(n.level, n.kind, n.name);
    remap[n.id.value] = existing ? *existing : out.add_node(n.level, n.kind, n.name, n.attrs);
  }
  for (const auto& e : g2.edges()) {
    for (const auto& [tag, truth] : e.evidence) {
      out.assert_relation(remap[e.src.value], e.relation, remap[e.dst.value], e.symmetry, truth,
                          tag);
    }
  }
  for (const auto& a : g2.abstractions()) {
    out.add_abstraction(remap[a.higher.value], remap[a.lower.value]);
  }
  if (auto v = validate(out); !v.empty()) throw MergeError("merged graph is unsound", std::move(v));
  return out;
}

}  // namespace strata::kg
