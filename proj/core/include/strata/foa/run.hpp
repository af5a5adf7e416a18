#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strata/foa/covers.hpp"
#include "strata/nal/engine.hpp"
#include "strata/spatial/predicates.hpp"

namespace strata::foa {

struct CoverStats {
  std::size_t ordinal = 0;
  std::size_t size = 0;
  std::size_t premises = 0;
  std::size_t passes = 0;
  friend bool operator==(const CoverStats&, const CoverStats&) = default;
};

struct RunStats {
  std::string mode;  // "foa" or "whole"
  std::size_t n_covers = 0;
  std::size_t K = 0;
  std::vector<CoverStats> per_cover;
  double wall_ms = 0.0;
};

struct RunOptions {
  nal::InferenceOptions inference;
  /// Worker threads for per-cover reasoning; results do not depend on it.
  std::size_t threads = 1;
};

/// Premise lines the reasoner receives for a graph: one per edge plus seven
/// attribute lines per rect.
std::size_t premise_count(const kg::KnowledgeGraph& graph);

/// Per rect, the strongest claim under nal::choose. All labelings must share
/// one rect-id universe (UniverseMismatch otherwise).
nal::Labeling merge_labelings(std::span<const nal::Labeling> labelings);

/// Whole-graph reasoning, or per-cover reasoning merged by choice. Errors
/// from a cover carry its ordinal.
std::pair<nal::Labeling, RunStats> run(const scene::Scene& scene, const spatial::Tolerances& tol,
                                       const std::vector<nal::Rule>& rules, const FoAConfig& cfg,
                                       bool use_foa, const RunOptions& options = {});

/// Same, on an already extracted relation graph.
std::pair<nal::Labeling, RunStats> run_on_graph(const kg::KnowledgeGraph& graph,
                                                const scene::Scene& scene,
                                                const std::vector<nal::Rule>& rules,
                                                const FoAConfig& cfg, bool use_foa,
                                                const RunOptions& options = {});

/// {mode, n_covers, K, per_cover: [{ordinal, size, premises, passes}], wall_ms}
std::string save_stats(const RunStats& stats);

}  // namespace strata::foa
