#pragma once

#include <span>

namespace strata::nal {

/// Evidential horizon k in c = w / (w + k).
inline constexpr double kEvidentialHorizon = 1.0;

/// Frequency / total-evidence-weight pair. Confidence is derived, never
/// stored, so it can not drift out of sync with the weight.
struct TruthValue {
  double f = 0.5;
  double w = 0.0;

  static TruthValue vacuous() { return {0.5, 0.0}; }
  static TruthValue from_confidence(double f, double c);

  double confidence() const { return w / (w + kEvidentialHorizon); }
  bool is_vacuous() const { return w == 0.0; }

  friend bool operator==(const TruthValue&, const TruthValue&) = default;
};

/// Pools evidence from two sources with disjoint evidential bases.
TruthValue revise(const TruthValue& a, const TruthValue& b);

/// Strong syllogistic deduction: f = f1 f2, c = f1 f2 c1 c2.
TruthValue deduce(const TruthValue& a, const TruthValue& b);

/// Product of frequencies and confidences. Throws EmptyPremiseList.
TruthValue conjoin(std::span<const TruthValue> premises);

/// e = c (f - 0.5) + 0.5
double expectation(const TruthValue& t);

}  // namespace strata::nal
