#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "strata/kg/graph.hpp"

namespace fixture {

// Same graph with edges asserted in a shuffled order.
inline strata::kg::KnowledgeGraph shuffled(const strata::kg::KnowledgeGraph& g, std::mt19937_64& rng) {
  using namespace strata::kg;
  KnowledgeGraph out(g.options());
  for (const auto& [name, info] : g.relations()) out.register_relation(name, info.symmetry, info.reflexive);
  for (const auto& n : g.nodes()) out.add_node(n.level, n.kind, n.name, n.attrs);
  std::vector<std::size_t> order(g.edges().size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i : order) {
    const auto& e = g.edges()[i];
    for (const auto& [tag, t] : e.evidence) out.assert_relation(e.src, e.relation, e.dst, e.symmetry, t, tag);
  }
  return out;
}

}  // namespace fixture
