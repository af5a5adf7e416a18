#include "strata/kg/graph.hpp"

#include <algorithm>

#include "strata/error.hpp"

namespace strata::kg {

std::string_view to_string(SymmetryClass s) {
  return s == SymmetryClass::Symmetric ? "Symmetric" : "AntiSymmetric";
}

std::optional<SymmetryClass> parse_symmetry(std::string_view s) {
  if (s == "Symmetric") return SymmetryClass::Symmetric;
  if (s == "AntiSymmetric") return SymmetryClass::AntiSymmetric;
  return std::nullopt;
}

nal::TruthValue Edge::truth() const {
  nal::TruthValue t = nal::TruthValue::vacuous();
  for (const auto& [tag, ev] : evidence) t = nal::revise(t, ev);
  return t;
}

std::set<std::string> Edge::tags() const {
  std::set<std::string> out;
  for (const auto& [tag, ev] : evidence) out.insert(tag);
  return out;
}

NodeId KnowledgeGraph::add_node(Level level, NodeKind kind, std::string name, Attributes attrs) {
  if (name.empty()) throw Error(ErrorCode::DuplicateName, "node name must be nonempty");
  if (!kind_allowed(kind, level)) {
    throw Error(ErrorCode::IllegalKindForLevel,
                std::string(to_string(kind)) + " is not allowed at " + to_string(level));
  }
  NodeKey key{level, kind, name};
  if (auto it = node_index_.find(key); it != node_index_.end()) {
    const Node& existing = nodes_[it->second.value];
    if (!attrs.empty() && attrs != existing.attrs) {
      throw Error(ErrorCode::DuplicateName,
                  "node '" + name + "' already exists with different attributes");
    }
    return it->second;
  }
  NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(Node{id, std::move(name), level, kind, std::move(attrs)});
  node_index_.emplace(std::move(key), id);
  return id;
}

std::optional<NodeId> KnowledgeGraph::find_node(Level level, NodeKind kind,
                                                std::string_view name) const {
  auto it = node_index_.find(NodeKey{level, kind, std::string(name)});
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> KnowledgeGraph::find_by_name(std::string_view name) const {
  for (const auto& n : nodes_) {
    if (n.name == name) return n.id;
  }
  return std::nullopt;
}

const Node& KnowledgeGraph::node(NodeId id) const {
  require_node(id);
  return nodes_[id.value];
}

void KnowledgeGraph::require_node(NodeId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::UnknownNode, "no node with id " + std::to_string(id.value));
  }
}

void KnowledgeGraph::register_relation(const std::string& name, SymmetryClass symmetry,
                                       bool reflexive) {
  auto it = relations_.find(name);
  if (it != relations_.end()) {
    if (it->second.symmetry != symmetry) {
      throw Error(ErrorCode::SymmetryClassConflict,
                  "relation '" + name + "' is registered as " +
                      std::string(to_string(it->second.symmetry)));
    }
    it->second.reflexive = it->second.reflexive || reflexive;
    return;
  }
  relations_.emplace(name, RelationInfo{symmetry, reflexive});
}

std::optional<RelationInfo> KnowledgeGraph::relation_info(std::string_view name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) return std::nullopt;
  return it->second;
}

EdgeId KnowledgeGraph::assert_relation(NodeId src, std::string_view relation, NodeId dst,
                                       SymmetryClass symmetry, nal::TruthValue truth,
                                       const std::string& evidence_tag) {
  require_node(src);
  require_node(dst);
  std::string rel(relation);
  const RelationInfo info = relation_info(rel).value_or(RelationInfo{symmetry, false});
  if (info.symmetry != symmetry) {
    throw Error(ErrorCode::SymmetryClassConflict,
                "relation '" + rel + "' is registered as " + std::string(to_string(info.symmetry)));
  }
  if (src == dst && !info.reflexive) {
    throw Error(ErrorCode::SelfLoop, "relation '" + rel + "' is not reflexive");
  }
  if (options_.strict_levels && nodes_[src.value].level != nodes_[dst.value].level) {
    throw Error(ErrorCode::CrossLevelEdge,
                "strict graph rejects '" + rel + "' between " +
                    to_string(nodes_[src.value].level) + " and " +
                    to_string(nodes_[dst.value].level));
  }
  register_relation(rel, symmetry);
  if (symmetry == SymmetryClass::Symmetric && dst < src) std::swap(src, dst);

  EdgeKey key{src, dst, rel};
  auto it = edge_index_.find(key);
  if (it == edge_index_.end()) {
    EdgeId id = edges_.size();
    Edge e{src, dst, rel, symmetry, {}};
    e.evidence.emplace(evidence_tag, truth);
    edges_.push_back(std::move(e));
    edge_index_.emplace(std::move(key), id);
    return id;
  }
  edges_[it->second].evidence.try_emplace(evidence_tag, truth);
  return it->second;
}

const Edge* KnowledgeGraph::find_edge(NodeId src, std::string_view relation, NodeId dst) const {
  auto info = relation_info(relation);
  if (!info) return nullptr;
  if (info->symmetry == SymmetryClass::Symmetric && dst < src) std::swap(src, dst);
  auto it = edge_index_.find(EdgeKey{src, dst, std::string(relation)});
  if (it == edge_index_.end()) return nullptr;
  return &edges_[it->second];
}

void KnowledgeGraph::add_abstraction(NodeId higher, NodeId lower) {
  require_node(higher);
  require_node(lower);
  AbstractionEdge e{higher, lower};
  if (abstraction_set_.insert(e).second) abstractions_.push_back(e);
}

bool KnowledgeGraph::reaches_down(NodeId from, NodeId target) const {
  std::vector<NodeId> stack{from};
  std::set<NodeId> seen{from};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    if (cur == target) return true;
    auto lo = abstraction_set_.lower_bound(AbstractionEdge{cur, NodeId{0}});
    for (auto it = lo; it != abstraction_set_.end() && it->higher == cur; ++it) {
      if (seen.insert(it->lower).second) stack.push_back(it->lower);
    }
  }
  return false;
}

NodeId KnowledgeGraph::abstract(std::string name, Level level, std::span<const NodeId> members) {
  if (members.empty()) throw Error(ErrorCode::EmptyMemberSet, "abstraction needs members");
  for (NodeId m : members) {
    require_node(m);
    if (!(level > nodes_[m.value].level)) {
      throw Error(ErrorCode::LevelOrderViolation,
                  "'" + nodes_[m.value].name + "' at " + to_string(nodes_[m.value].level) +
                      " is not below " + to_string(level));
    }
  }
  auto existing = find_node(level, NodeKind::Concept, name);
  if (existing) {
    for (NodeId m : members) {
      if (reaches_down(m, *existing)) {
        throw Error(ErrorCode::LevelOrderViolation,
                    "abstracting '" + nodes_[m.value].name + "' would close a cycle");
      }
    }
  }
  NodeId concept_id = add_node(level, NodeKind::Concept, std::move(name));
  for (NodeId m : members) add_abstraction(concept_id, m);
  return concept_id;
}

std::set<NodeId> KnowledgeGraph::extension(NodeId concept_node) const {
  require_node(concept_node);
  std::set<NodeId> out;
  for (const auto& a : abstractions_) {
    if (a.higher == concept_node) out.insert(a.lower);
  }
  return out;
}

std::set<NodeId> KnowledgeGraph::intension(NodeId node) const {
  require_node(node);
  std::set<NodeId> out;
  for (const auto& a : abstractions_) {
    if (a.lower == node) out.insert(a.higher);
  }
  return out;
}

}  // namespace strata::kg
