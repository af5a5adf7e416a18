#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strata/kg/graph.hpp"
#include "strata/scene/scene.hpp"
#include "strata/spatial/predicates.hpp"

namespace strata::spatial {

/// Crisp truth carried by every geometric edge.
inline constexpr nal::TruthValue kGeometryTruth{1.0, 1.0};

std::string geometry_tag(const scene::Scene& scene);

/// Registers the spatial vocabulary with its symmetry classes.
void register_vocabulary(kg::KnowledgeGraph& graph);

/// floating(b) given every relation already computed for the scene.
bool floating(std::size_t b, const scene::Scene& scene, const Tolerances& tol);

/// Unordered index pairs (i < j) that can satisfy at least one binary
/// predicate. Pairs with neither x- nor y-interval contact (widened by the
/// containment slack) are pruned; a zero min_overlap disables pruning.
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const scene::Scene& scene,
                                                                  const Tolerances& tol);

/// L1 relation graph of a scene: one Percept node per rect (named by rect id,
/// carrying x, y, cx, cy, w, h, area, circumference), a Concept node "void",
/// and one edge per predicate that holds. The graph is strict about levels.
kg::KnowledgeGraph extract_relations(const scene::Scene& scene, const Tolerances& tol = {});

}  // namespace strata::spatial
