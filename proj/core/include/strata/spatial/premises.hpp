#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strata/kg/graph.hpp"
#include "strata/nal/truth.hpp"

namespace strata::spatial {

/// One line of premise text.
///   relation:  <(A,B) --> REL>. {F W}
///   unary:     <A --> [floating]>. {F W}
///   attribute: <A --> [ATTR=VALUE]>. {1.000000 1}
struct Premise {
  enum class Kind { Relation, Unary, Attribute };
  Kind kind = Kind::Relation;
  std::string subject;
  std::string object;     // Relation only
  std::string predicate;  // relation, unary property or attribute name
  double value = 0.0;     // Attribute only
  nal::TruthValue truth{1.0, 1.0};

  friend auto operator<=>(const Premise&, const Premise&) = default;
};

/// The seven attributes emitted per rect.
inline constexpr std::string_view kPremiseAttributes[] = {"x", "y", "cx", "cy", "w", "h", "area"};

/// Statements of an L1 relation graph, at the precision the text keeps,
/// sorted by their rendered line.
std::vector<Premise> premises_of(const kg::KnowledgeGraph& graph);

std::string format_premise(const Premise& p);
/// Lines sorted lexicographically, each newline-terminated.
std::string format_premises(std::vector<Premise> premises);
std::string to_premises(const kg::KnowledgeGraph& graph);

/// Throws DocumentError(PremiseSyntaxError) carrying the 1-based line.
std::vector<Premise> parse_premises(std::string_view text);

}  // namespace strata::spatial
