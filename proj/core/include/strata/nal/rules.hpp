#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strata/nal/truth.hpp"

namespace strata::nal {

/// predicate(args...), optionally negated. Arguments are variables
/// (identifiers starting with an uppercase letter).
struct Atom {
  std::string predicate;
  std::vector<std::string> args;
  bool negated = false;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Horn-style rule over relation edges and label statements:
///
///   R1: contains(A,B) & !floating(B) => shelf(A), product(B) @ {0.9 9}
///
/// Premises with the name of a label (shelf, product, other) match derived
/// statements; every other premise matches graph edges, one argument meaning
/// an edge to the distinguished void node. Negation is closed-world absence
/// of an edge. Conclusions are label atoms. The prior is {f w}.
struct Rule {
  std::string id;
  std::vector<Atom> premises;
  std::vector<Atom> conclusions;
  TruthValue prior{0.9, 9.0};
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// The four retail classification rules.
std::vector<Rule> default_rules();

/// Throws RuleSyntaxError.
Rule parse_rule(std::string_view line);
/// One rule per line; blank lines and lines starting with '#' are skipped.
std::vector<Rule> parse_rules(std::string_view text);

std::string format_rule(const Rule& rule);
std::string format_rules(const std::vector<Rule>& rules);

/// Rejects rules whose variables are not all bound by a positive edge premise,
/// negated label premises, and conclusions that are not label atoms.
void check_rule(const Rule& rule);

}  // namespace strata::nal
