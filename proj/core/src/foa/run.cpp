#include "strata/foa/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <thread>

#include "detail/format.hpp"
#include "strata/error.hpp"
#include "strata/spatial/extract.hpp"
#include "strata/spatial/premises.hpp"

namespace strata::foa {

std::size_t premise_count(const kg::KnowledgeGraph& graph) {
  std::size_t rects = 0;
  for (const auto& n : graph.nodes()) {
    if (n.kind == kg::NodeKind::Percept && n.level == kg::Level::l1()) ++rects;
  }
  return graph.edges().size() + std::size(spatial::kPremiseAttributes) * rects;
}

nal::Labeling merge_labelings(std::span<const nal::Labeling> labelings) {
  nal::Labeling out;
  if (labelings.empty()) return out;
  out = labelings.front();
  for (std::size_t i = 1; i < labelings.size(); ++i) {
    const auto& l = labelings[i];
    if (l.claims.size() != out.claims.size()) {
      throw Error(ErrorCode::UniverseMismatch, "labelings cover different rect sets");
    }
    auto it = out.claims.begin();
    for (const auto& [id, claim] : l.claims) {
      if (it->first != id) {
        throw Error(ErrorCode::UniverseMismatch, "rect '" + id + "' is not in every labeling");
      }
      it->second = nal::choose(it->second, claim);
      ++it;
    }
  }
  return out;
}

namespace {

struct CoverResult {
  nal::Labeling labeling;
  CoverStats stats;
};

CoverResult reason_cover(const kg::KnowledgeGraph& graph, const Cover& cover,
                         const std::vector<nal::Rule>& rules, const nal::Labeling& universe,
                         const RunOptions& options) {
  const auto sub = induced_subgraph(graph, cover.members, "cover:" + std::to_string(cover.ordinal));
  nal::Inference inf;
  try {
    inf = nal::infer(sub, rules, options.inference);
  } catch (const Error& e) {
    throw Error(e.code(), "cover " + std::to_string(cover.ordinal) + ": " + e.what());
  }
  CoverResult r;
  r.labeling = universe;
  for (auto& [id, claim] : inf.labeling.claims) r.labeling.claims[id] = claim;
  r.stats = {cover.ordinal, cover.members.size(), premise_count(sub), inf.passes};
  return r;
}

}  // namespace

std::pair<nal::Labeling, RunStats> run_on_graph(const kg::KnowledgeGraph& graph,
                                                const scene::Scene& scene,
                                                const std::vector<nal::Rule>& rules,
                                                const FoAConfig& cfg, bool use_foa,
                                                const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunStats stats;
  stats.K = cfg.K;
  nal::Labeling result;

  if (!use_foa) {
    stats.mode = "whole";
    const auto inf = nal::infer(graph, rules, options.inference);
    result = inf.labeling;
    stats.n_covers = 1;
    stats.per_cover.push_back({0, scene.rects.size(), premise_count(graph), inf.passes});
  } else {
    stats.mode = "foa";
    const auto covers = build_covers(graph, scene, cfg);
    nal::Labeling universe;
    for (const auto& r : scene.rects) universe.claims.emplace(r.id, nal::Claim{});

    std::vector<std::optional<CoverResult>> results(covers.size());
    const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, covers.size()));
    if (threads == 1) {
      for (std::size_t i = 0; i < covers.size(); ++i) {
        results[i] = reason_cover(graph, covers[i], rules, universe, options);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::exception_ptr> errors(covers.size());
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < covers.size(); i = next++) {
            try {
              results[i] = reason_cover(graph, covers[i], rules, universe, options);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
      pool.clear();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    std::vector<nal::Labeling> labelings;
    for (auto& r : results) {
      labelings.push_back(std::move(r->labeling));
      stats.per_cover.push_back(r->stats);
    }
    result = merge_labelings(labelings);
    stats.n_covers = covers.size();
  }
  stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {std::move(result), std::move(stats)};
}

std::pair<nal::Labeling, RunStats> run(const scene::Scene& scene, const spatial::Tolerances& tol,
                                       const std::vector<nal::Rule>& rules, const FoAConfig& cfg,
                                       bool use_foa, const RunOptions& options) {
  return run_on_graph(spatial::extract_relations(scene, tol), scene, rules, cfg, use_foa, options);
}

std::string save_stats(const RunStats& s) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& c : s.per_cover) {
    per.push_back(
        {{"ordinal", c.ordinal}, {"size", c.size}, {"premises", c.premises}, {"passes", c.passes}});
  }
  return detail::dump({{"mode", s.mode},
                       {"n_covers", s.n_covers},
                       {"K", s.K},
                       {"per_cover", std::move(per)},
                       {"wall_ms", s.wall_ms}});
}

}  // namespace strata::foa
