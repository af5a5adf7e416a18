#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strata/error.hpp"
#include "strata/kg/graph.hpp"

namespace strata::kg {

enum class ViolationCode {
  AntiSymmetryBothDirections,
  CrossLevelNonAbstractionEdge,
  AbstractionCycle,
  LevelOrderInverted,
};

std::string_view to_string(ViolationCode code);

/// `first`/`second` are the edge endpoints (or, for abstraction problems,
/// higher/lower). A cycle is reported once per strongly connected component,
/// with its two smallest node ids as the subject.
struct Violation {
  ViolationCode code;
  NodeId first;
  NodeId second;
  std::string relation;
  std::string message;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.code == b.code && a.first == b.first && a.second == b.second &&
           a.relation == b.relation;
  }
  friend auto operator<=>(const Violation& a, const Violation& b) {
    return std::tie(a.code, a.first, a.second, a.relation) <=>
           std::tie(b.code, b.first, b.second, b.relation);
  }
};

/// All structural violations, sorted. Pure.
std::vector<Violation> validate(const KnowledgeGraph& graph);

class MergeError : public Error {
 public:
  MergeError(const std::string& message, std::vector<Violation> violations)
      : Error(ErrorCode::MergeViolation, message), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Union keyed by (level, kind, name). Per-tag evidence is unioned, so
/// disjoint tags pool and shared tags count once. g1's node ids are kept;
/// g2's new nodes follow in g2 id order. Throws MergeError when either input
/// or the union fails validation.
KnowledgeGraph merge(const KnowledgeGraph& g1, const KnowledgeGraph& g2);

}  // namespace strata::kg
