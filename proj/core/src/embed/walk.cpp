#include "strata/embed/walk.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "strata/error.hpp"

namespace strata::embed {

void WalkConfig::check() const {
  if (num_walks < 1 || walk_length < 1 || !(p > 0.0) || !(q > 0.0)) {
    throw Error(ErrorCode::ConfigInvalid, "walk parameters must be positive");
  }
}

Adjacency::Adjacency(const kg::KnowledgeGraph& graph) : nbrs_(graph.node_count()) {
  for (const auto& e : graph.edges()) {
    if (e.src == e.dst) continue;
    nbrs_[e.src.value].push_back(e.dst);
    nbrs_[e.dst.value].push_back(e.src);
  }
  for (auto& v : nbrs_) {
    std::sort(v.begin(), v.end(), [](kg::NodeId a, kg::NodeId b) { return a.value < b.value; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

bool Adjacency::adjacent(kg::NodeId a, kg::NodeId b) const {
  const auto& v = nbrs_[a.value];
  return std::binary_search(v.begin(), v.end(), b,
                            [](kg::NodeId x, kg::NodeId y) { return x.value < y.value; });
}

std::vector<std::pair<kg::NodeId, double>> transition_weights(const Adjacency& adj,
                                                              std::optional<kg::NodeId> prev,
                                                              kg::NodeId cur, double p, double q) {
  const auto& nbrs = adj.neighbors(cur);
  if (nbrs.empty()) {
    throw Error(ErrorCode::IsolatedNode, "node " + std::to_string(cur.value) + " has no neighbors");
  }
  std::vector<std::pair<kg::NodeId, double>> out;
  out.reserve(nbrs.size());
  for (kg::NodeId x : nbrs) {
    double w = 1.0;
    if (prev) {
      if (x == *prev) {
        w = 1.0 / p;
      } else if (!adj.adjacent(*prev, x)) {
        w = 1.0 / q;
      }
    }
    out.emplace_back(x, w);
  }
  return out;
}

std::map<std::string, double> transition_weights(const kg::KnowledgeGraph& graph,
                                                 std::optional<std::string> prev,
                                                 const std::string& cur, double p, double q) {
  const auto node_of = [&](const std::string& name) {
    auto id = graph.find_by_name(name);
    if (!id) throw Error(ErrorCode::UnknownNode, "no node named '" + name + "'");
    return *id;
  };
  const Adjacency adj(graph);
  std::optional<kg::NodeId> prev_id;
  if (prev) prev_id = node_of(*prev);
  std::map<std::string, double> out;
  for (const auto& [n, w] : transition_weights(adj, prev_id, node_of(cur), p, q)) {
    out.emplace(graph.node(n).name, w);
  }
  return out;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t walk_seed(std::uint64_t master, std::uint32_t node, std::uint32_t walk) {
  return splitmix(splitmix(splitmix(master) ^ node) ^ walk);
}

Walk random_walk(const Adjacency& adj, kg::NodeId start, const WalkConfig& cfg,
                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Walk walk{start};
  if (adj.neighbors(start).empty()) return walk;
  std::optional<kg::NodeId> prev;
  while (walk.size() < static_cast<std::size_t>(cfg.walk_length)) {
    const kg::NodeId cur = walk.back();
    const auto weights = transition_weights(adj, prev, cur, cfg.p, cfg.q);
    double total = 0.0;
    for (const auto& [n, w] : weights) total += w;
    double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    kg::NodeId next = weights.back().first;
    for (const auto& [n, w] : weights) {
      if (u < w) {
        next = n;
        break;
      }
      u -= w;
    }
    prev = cur;
    walk.push_back(next);
  }
  return walk;
}

std::vector<Walk> walk_corpus(const kg::KnowledgeGraph& graph, const WalkConfig& cfg,
                              std::size_t threads) {
  cfg.check();
  const Adjacency adj(graph);
  const std::size_t n = adj.size();
  const std::size_t per = static_cast<std::size_t>(cfg.num_walks);
  std::vector<Walk> corpus(n * per);
  const auto fill = [&](std::size_t node) {
    for (std::size_t w = 0; w < per; ++w) {
      const kg::NodeId id{static_cast<std::uint32_t>(node)};
      corpus[node * per + w] =
          random_walk(adj, id, cfg, walk_seed(cfg.rng_seed, id.value, static_cast<std::uint32_t>(w)));
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fill(i);
    return corpus;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) fill(i);
      });
    }
  }
  return corpus;
}

}  // namespace strata::embed
