#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/kg/graph.hpp"

namespace strata::embed {

struct WalkConfig {
  int num_walks = 10;
  int walk_length = 20;
  double p = 1.0;  // return
  double q = 1.0;  // in-out
  std::uint64_t rng_seed = 0;
  void check() const;
};

/// Undirected neighbourhoods of a graph, sorted by node id. Self loops are
/// dropped.
class Adjacency {
 public:
  explicit Adjacency(const kg::KnowledgeGraph& graph);

  std::size_t size() const { return nbrs_.size(); }
  const std::vector<kg::NodeId>& neighbors(kg::NodeId n) const { return nbrs_[n.value]; }
  bool adjacent(kg::NodeId a, kg::NodeId b) const;

 private:
  std::vector<std::vector<kg::NodeId>> nbrs_;
};

/// Unnormalized second-order weights over the neighbours of `cur`: 1/p back
/// to `prev`, 1 to a common neighbour, 1/q elsewhere. Without `prev` every
/// neighbour weighs 1. Throws IsolatedNode.
std::vector<std::pair<kg::NodeId, double>> transition_weights(const Adjacency& adj,
                                                              std::optional<kg::NodeId> prev,
                                                              kg::NodeId cur, double p, double q);

/// By node name.
std::map<std::string, double> transition_weights(const kg::KnowledgeGraph& graph,
                                                 std::optional<std::string> prev,
                                                 const std::string& cur, double p, double q);

/// Seed of walk `walk` from `node`.
std::uint64_t walk_seed(std::uint64_t master, std::uint32_t node, std::uint32_t walk);

using Walk = std::vector<kg::NodeId>;

/// num_walks walks per node, grouped by start node in id order. Edge
/// direction is ignored; a node without edges yields walks of length 1.
/// Each walk has its own seed, so `threads` does not change the output.
std::vector<Walk> walk_corpus(const kg::KnowledgeGraph& graph, const WalkConfig& cfg,
                              std::size_t threads = 1);

/// One walk from `start` drawn with `seed`.
Walk random_walk(const Adjacency& adj, kg::NodeId start, const WalkConfig& cfg, std::uint64_t seed);

}  // namespace strata::embed
