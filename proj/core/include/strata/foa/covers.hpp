#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "strata/kg/graph.hpp"
#include "strata/scene/scene.hpp"

namespace strata::foa {

enum class SeedPolicy { LargestContainer, LargestAny };

/// Which edges make two rects neighbours. Local drops the relations whose
/// geometry puts no bound on distance (above, below, aligned_v).
enum class Neighbourhood { Local, AnyRelation };

struct FoAConfig {
  std::size_t K = 12;
  SeedPolicy seed_policy = SeedPolicy::LargestContainer;
  Neighbourhood neighbourhood = Neighbourhood::Local;
  void check() const;
};

/// Seed first, then neighbours in traversal order.
struct Cover {
  std::string seed;
  std::vector<std::string> members;
  std::size_t ordinal = 0;
  friend bool operator==(const Cover&, const Cover&) = default;
};

/// Overlapping covers of the relation graph. Repeatedly seeds at the largest
/// rect not yet used as a seed (containers first under LargestContainer) and
/// adds its graph neighbours by decreasing area until K members. Stops once
/// every rect is in some cover. Ties go to the smaller rect id.
std::vector<Cover> build_covers(const kg::KnowledgeGraph& graph, const scene::Scene& scene,
                                const FoAConfig& cfg);

/// Subgraph induced by `members` plus the void node, every edge re-tagged
/// with the single evidence tag `tag` (its pooled truth carried over).
kg::KnowledgeGraph induced_subgraph(const kg::KnowledgeGraph& graph,
                                    const std::vector<std::string>& members, const std::string& tag);

}  // namespace strata::foa
