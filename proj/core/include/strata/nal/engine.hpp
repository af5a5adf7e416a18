#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strata/kg/graph.hpp"
#include "strata/nal/rules.hpp"
#include "strata/nal/truth.hpp"
#include "strata/scene/scene.hpp"

namespace strata::nal {

using scene::Label;

/// A label claim for one rect.
struct Claim {
  Label label = Label::Other;
  TruthValue truth = TruthValue::vacuous();
  friend bool operator==(const Claim&, const Claim&) = default;
};

/// Picks the stronger claim: higher expectation, then higher confidence,
/// then Product > Shelf > Other. Remaining ties fall to frequency and weight,
/// so the order is total.
const Claim& choose(const Claim& a, const Claim& b);

/// Final label per rect id. Rects without any derived statement hold
/// (Other, vacuous).
struct Labeling {
  std::map<std::string, Claim> claims;
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// A derived inheritance statement `subject --> label`.
struct Statement {
  std::string subject;
  Label predicate = Label::Other;
  TruthValue truth;
  /// Edges ("rel(a,b)") and statements ("label(a)") the truth rests on,
  /// transitively. Filled only when requested.
  std::set<std::string> base;
  /// Number of admitted rule instantiations revised into `truth`.
  std::size_t derivations = 0;
};

struct InferenceOptions {
  std::size_t max_passes = 100;
  double tolerance = 1e-9;
  bool collect_bases = false;
};

struct Inference {
  Labeling labeling;
  std::vector<Statement> statements;  // sorted by (subject, label)
  std::size_t passes = 0;
  std::size_t instantiations = 0;  // rule instances whose edge premises matched
  std::size_t blocked = 0;         // admissions refused by the evidential base
};

/// Forward chaining to a fixpoint over an L1 relation graph.
///
/// Each rule instance (rule, variable binding) whose edge premises hold
/// becomes a candidate derivation per conclusion. A candidate is admitted
/// once its label premises exist and no premise rests on the conclusion;
/// admission is permanent. Truth of a derivation is
/// deduce(conjoin(premise truths), prior), and a statement's truth is the
/// revision of its admitted derivations. Candidates are visited in a
/// canonical order (rule, binding names), so the result is independent of
/// edge insertion order. Throws NonConvergence past max_passes.
Inference infer(const kg::KnowledgeGraph& graph, const std::vector<Rule>& rules,
                const InferenceOptions& options = {});

inline Labeling infer_labels(const kg::KnowledgeGraph& graph, const std::vector<Rule>& rules) {
  return infer(graph, rules).labeling;
}

/// Copy of `graph` with L2 concepts shelf/product/other abstracting the rects
/// the labeling assigns to them.
kg::KnowledgeGraph annotate(const kg::KnowledgeGraph& graph, const Labeling& labeling);

std::string save_labeling(const Labeling& labeling);
Labeling load_labeling(std::string_view text);

}  // namespace strata::nal
