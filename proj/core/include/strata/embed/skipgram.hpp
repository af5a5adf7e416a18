#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "strata/embed/walk.hpp"

namespace strata::embed {

struct EmbeddingSpace {
  int dim = 2;
  std::map<std::string, std::vector<double>> vectors;
  friend bool operator==(const EmbeddingSpace&, const EmbeddingSpace&) = default;
};

struct TrainConfig {
  int dim = 2;
  int window = 5;
  int negatives = 5;
  int epochs = 5;
  double lr = 0.025;  // decays linearly to lr * 1e-4
  std::uint64_t rng_seed = 0;
  void check() const;
};

struct Training {
  EmbeddingSpace space;
  /// Mean loss per (centre, context) pair after each epoch, every epoch
  /// scored against the same negative draws.
  std::vector<double> epoch_loss;
};

/// Skip-gram with negative sampling over a corpus of token sequences.
/// Negatives are drawn from unigram counts raised to 0.75. Single-threaded
/// and deterministic for a fixed seed. Throws EmptyCorpus.
Training train(const std::vector<std::vector<std::string>>& corpus, const TrainConfig& cfg = {});

/// Walks rendered as node names.
std::vector<std::vector<std::string>> named(const kg::KnowledgeGraph& graph,
                                            const std::vector<Walk>& walks);

/// walk_corpus followed by train.
EmbeddingSpace embed_graph(const kg::KnowledgeGraph& graph, const WalkConfig& walk,
                           const TrainConfig& train_cfg = {});

}  // namespace strata::embed
