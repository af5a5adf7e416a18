#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "strata/kg/level.hpp"
#include "strata/nal/truth.hpp"

namespace strata::kg {

struct NodeId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

using EdgeId = std::size_t;
using Attributes = std::map<std::string, double>;

enum class SymmetryClass : std::uint8_t { AntiSymmetric, Symmetric };

std::string_view to_string(SymmetryClass s);
std::optional<SymmetryClass> parse_symmetry(std::string_view s);

struct Node {
  NodeId id;
  std::string name;
  Level level;
  NodeKind kind = NodeKind::Concept;
  Attributes attrs;
};

/// A typed relation instance. Symmetric edges are stored once with
/// src < dst; `KnowledgeGraph::holds` answers both orientations.
/// Truth is the revision of the per-tag evidence, folded in tag order.
struct Edge {
  NodeId src;
  NodeId dst;
  std::string relation;
  SymmetryClass symmetry = SymmetryClass::AntiSymmetric;
  std::map<std::string, nal::TruthValue> evidence;

  nal::TruthValue truth() const;
  std::set<std::string> tags() const;
};

struct AbstractionEdge {
  NodeId higher;
  NodeId lower;
  friend auto operator<=>(const AbstractionEdge&, const AbstractionEdge&) = default;
};

struct RelationInfo {
  SymmetryClass symmetry = SymmetryClass::AntiSymmetric;
  bool reflexive = false;
  friend bool operator==(const RelationInfo&, const RelationInfo&) = default;
};

struct GraphOptions {
  /// Reject relation edges between different levels at insert time instead
  /// of leaving them for validate() to flag.
  bool strict_levels = false;
  friend bool operator==(const GraphOptions&, const GraphOptions&) = default;
};

class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;
  explicit KnowledgeGraph(GraphOptions options) : options_(options) {}

  const GraphOptions& options() const { return options_; }

  /// Idempotent for an identical (level, kind, name). Passing attributes that
  /// differ from an existing node's raises DuplicateName.
  NodeId add_node(Level level, NodeKind kind, std::string name, Attributes attrs = {});
  std::optional<NodeId> find_node(Level level, NodeKind kind, std::string_view name) const;
  /// First node with this name in id order.
  std::optional<NodeId> find_by_name(std::string_view name) const;
  const Node& node(NodeId id) const;
  bool contains(NodeId id) const { return id.value < nodes_.size(); }
  std::span<const Node> nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }

  void register_relation(const std::string& name, SymmetryClass symmetry, bool reflexive = false);
  std::optional<RelationInfo> relation_info(std::string_view name) const;
  const std::map<std::string, RelationInfo, std::less<>>& relations() const { return relations_; }

  /// Inserts or revises `relation(src, dst)`. An unregistered relation is
  /// registered with `symmetry`. Re-asserting with a tag already present is a
  /// no-op; a new tag adds evidence.
  EdgeId assert_relation(NodeId src, std::string_view relation, NodeId dst, SymmetryClass symmetry,
                         nal::TruthValue truth, const std::string& evidence_tag);

  const Edge* find_edge(NodeId src, std::string_view relation, NodeId dst) const;
  bool holds(NodeId src, std::string_view relation, NodeId dst) const {
    return find_edge(src, relation, dst) != nullptr;
  }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  /// Unchecked insertion; validate() reports ordering problems and cycles.
  void add_abstraction(NodeId higher, NodeId lower);
  /// Creates (or reuses) a concept at `level` abstracting every member.
  NodeId abstract(std::string name, Level level, std::span<const NodeId> members);
  std::span<const AbstractionEdge> abstractions() const { return abstractions_; }

  std::set<NodeId> extension(NodeId concept_node) const;
  std::set<NodeId> intension(NodeId node) const;

 private:
  using NodeKey = std::tuple<Level, NodeKind, std::string>;
  using EdgeKey = std::tuple<NodeId, NodeId, std::string>;

  void require_node(NodeId id) const;
  bool reaches_down(NodeId from, NodeId target) const;

  GraphOptions options_;
  std::vector<Node> nodes_;
  std::map<NodeKey, NodeId, std::less<>> node_index_;
  std::map<std::string, RelationInfo, std::less<>> relations_;
  std::vector<Edge> edges_;
  std::map<EdgeKey, EdgeId, std::less<>> edge_index_;
  std::vector<AbstractionEdge> abstractions_;
  std::set<AbstractionEdge> abstraction_set_;
};

}  // namespace strata::kg

template <>
struct std::hash<strata::kg::NodeId> {
  std::size_t operator()(strata::kg::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
