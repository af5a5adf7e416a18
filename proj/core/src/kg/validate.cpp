#include "strata/kg/validate.hpp"

#include <algorithm>
#include <functional>

namespace strata::kg {

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::AntiSymmetryBothDirections: return "AntiSymmetryBothDirections";
    case ViolationCode::CrossLevelNonAbstractionEdge: return "CrossLevelNonAbstractionEdge";
    case ViolationCode::AbstractionCycle: return "AbstractionCycle";
    case ViolationCode::LevelOrderInverted: return "LevelOrderInverted";
  }
  return "?";
}

namespace {

// Tarjan's SCC over the abstraction edges, iterative to survive deep chains.
std::vector<std::vector<NodeId>> cyclic_components(const KnowledgeGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::uint32_t>> adj(n);
  std::vector<bool> self_loop(n, false);
  for (const auto& a : g.abstractions()) {
    adj[a.higher.value].push_back(a.lower.value);
    if (a.higher == a.lower) self_loop[a.higher.value] = true;
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());

  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 0;
  std::vector<std::vector<NodeId>> out;

  struct Frame {
    std::uint32_t v;
    std::size_t next;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& fr = call.back();
      if (fr.next < adj[fr.v].size()) {
        std::uint32_t w = adj[fr.v][fr.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
        continue;
      }
      const std::uint32_t v = fr.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] != index[v]) continue;
      std::vector<NodeId> comp;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(NodeId{w});
      } while (w != v);
      if (comp.size() > 1 || self_loop[v]) {
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> validate(const KnowledgeGraph& g) {
  std::vector<Violation> out;
  for (const auto& e : g.edges()) {
    const Node& s = g.node(e.src);
    const Node& d = g.node(e.dst);
    if (e.symmetry == SymmetryClass::AntiSymmetric && e.src < e.dst &&
        g.holds(e.dst, e.relation, e.src)) {
      out.push_back({ViolationCode::AntiSymmetryBothDirections, e.src, e.dst, e.relation,
                     e.relation + "(" + s.name + "," + d.name + ") holds in both directions"});
    }
    if (s.level != d.level) {
      out.push_back({ViolationCode::CrossLevelNonAbstractionEdge, e.src, e.dst, e.relation,
                     e.relation + " links " + to_string(s.level) + " '" + s.name + "' to " +
                         to_string(d.level) + " '" + d.name + "'"});
    }
  }
  for (const auto& a : g.abstractions()) {
    const Node& hi = g.node(a.higher);
    const Node& lo = g.node(a.lower);
    if (!(hi.level > lo.level)) {
      out.push_back({ViolationCode::LevelOrderInverted, a.higher, a.lower, {},
                     "'" + hi.name + "' at " + to_string(hi.level) + " abstracts '" + lo.name +
                         "' at " + to_string(lo.level)});
    }
  }
  for (const auto& comp : cyclic_components(g)) {
    NodeId second = comp.size() > 1 ? comp[1] : comp[0];
    out.push_back({ViolationCode::AbstractionCycle, comp[0], second, {},
                   "abstraction cycle through " + std::to_string(comp.size()) + " node(s) from '" +
                       g.node(comp[0]).name + "'"});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace strata::kg
