#include "strata/embed/skipgram.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "strata/error.hpp"

namespace strata::embed {

void TrainConfig::check() const {
  if (dim < 1 || window < 1 || negatives < 0 || epochs < 1 || !(lr > 0.0)) {
    throw Error(ErrorCode::ConfigInvalid, "training parameters must be positive");
  }
}

namespace {

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log(sigmoid(x)) without underflow.
double log_sigmoid(double x) { return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x)); }

}  // namespace

Training train(const std::vector<std::vector<std::string>>& corpus, const TrainConfig& cfg) {
  cfg.check();
  std::map<std::string, std::size_t> vocab;
  std::size_t tokens = 0;
  for (const auto& seq : corpus) {
    for (const auto& t : seq) vocab.emplace(t, 0);
    tokens += seq.size();
  }
  if (tokens == 0) throw Error(ErrorCode::EmptyCorpus, "corpus has no tokens");

  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  for (auto& [name, idx] : vocab) {
    idx = names.size();
    index.emplace(name, idx);
    names.push_back(name);
  }
  const std::size_t V = names.size();
  const std::size_t D = static_cast<std::size_t>(cfg.dim);

  std::vector<std::vector<std::size_t>> seqs;
  seqs.reserve(corpus.size());
  std::vector<double> counts(V, 0.0);
  for (const auto& seq : corpus) {
    auto& s = seqs.emplace_back();
    for (const auto& t : seq) {
      const std::size_t i = index.at(t);
      s.push_back(i);
      counts[i] += 1.0;
    }
  }

  std::vector<double> cumulative(V);
  double acc = 0.0;
  for (std::size_t i = 0; i < V; ++i) {
    acc += std::pow(counts[i], 0.75);
    cumulative[i] = acc;
  }

  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto draw_negative = [&] {
    const double u = unit(rng) * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(), V - 1));
  };

  std::vector<double> in(V * D), out(V * D, 0.0);
  for (auto& v : in) v = (unit(rng) - 0.5) / static_cast<double>(D);

  const double total = static_cast<double>(tokens) * cfg.epochs;
  double processed = 0.0;
  std::vector<double> grad(D);
  Training result;

  const auto update = [&](std::size_t centre, std::size_t target, double label, double lr) {
    double* vc = &in[centre * D];
    double* vt = &out[target * D];
    double dot = 0.0;
    for (std::size_t d = 0; d < D; ++d) dot += vc[d] * vt[d];
    const double g = (label - sigmoid(dot)) * lr;
    for (std::size_t d = 0; d < D; ++d) {
      grad[d] += g * vt[d];
      vt[d] += g * vc[d];
    }
  };

  // Objective over the whole corpus at the current vectors, with the same
  // negative draws every time so epochs compare.
  const auto objective = [&] {
    std::mt19937_64 eval_rng(cfg.rng_seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto dot = [&](std::size_t a, std::size_t b) {
      double x = 0.0;
      for (std::size_t d = 0; d < D; ++d) x += in[a * D + d] * out[b * D + d];
      return x;
    };
    double loss = 0.0;
    std::size_t pairs = 0;
    for (const auto& s : seqs) {
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        const std::size_t lo = pos >= static_cast<std::size_t>(cfg.window) ? pos - cfg.window : 0;
        const std::size_t hi = std::min(s.size() - 1, pos + cfg.window);
        for (std::size_t c = lo; c <= hi; ++c) {
          if (c == pos) continue;
          double l = -log_sigmoid(dot(s[pos], s[c]));
          for (int k = 0; k < cfg.negatives; ++k) {
            const double x = u(eval_rng) * acc;
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
            const auto neg = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(), V - 1));
            if (neg == s[c]) continue;
            l += -log_sigmoid(-dot(s[pos], neg));
          }
          loss += l;
          ++pairs;
        }
      }
    }
    return pairs ? loss / static_cast<double>(pairs) : 0.0;
  };

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto& s : seqs) {
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        const double lr = cfg.lr * std::max(1e-4, 1.0 - processed / total);
        processed += 1.0;
        const std::size_t lo = pos >= static_cast<std::size_t>(cfg.window) ? pos - cfg.window : 0;
        const std::size_t hi = std::min(s.size() - 1, pos + cfg.window);
        for (std::size_t c = lo; c <= hi; ++c) {
          if (c == pos) continue;
          const std::size_t centre = s[pos];
          const std::size_t context = s[c];
          std::fill(grad.begin(), grad.end(), 0.0);
          update(centre, context, 1.0, lr);
          for (int k = 0; k < cfg.negatives; ++k) {
            const std::size_t neg = draw_negative();
            if (neg == context) continue;
            update(centre, neg, 0.0, lr);
          }
          for (std::size_t d = 0; d < D; ++d) in[centre * D + d] += grad[d];
        }
      }
    }
    result.epoch_loss.push_back(objective());
  }

  result.space.dim = cfg.dim;
  for (std::size_t i = 0; i < V; ++i) {
    result.space.vectors.emplace(names[i], std::vector<double>(in.begin() + i * D,
                                                               in.begin() + (i + 1) * D));
  }
  return result;
}

std::vector<std::vector<std::string>> named(const kg::KnowledgeGraph& graph,
                                            const std::vector<Walk>& walks) {
  std::vector<std::vector<std::string>> out;
  out.reserve(walks.size());
  for (const auto& w : walks) {
    auto& s = out.emplace_back();
    for (kg::NodeId n : w) s.push_back(graph.node(n).name);
  }
  return out;
}

EmbeddingSpace embed_graph(const kg::KnowledgeGraph& graph, const WalkConfig& walk,
                           const TrainConfig& train_cfg) {
  return train(named(graph, walk_corpus(graph, walk)), train_cfg).space;
}

}  // namespace strata::embed
