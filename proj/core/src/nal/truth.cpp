#include "strata/nal/truth.hpp"

#include "strata/error.hpp"

namespace strata::nal {

TruthValue TruthValue::from_confidence(double f, double c) {
  if (c <= 0.0) return {f, 0.0};
  return {f, kEvidentialHorizon * c / (1.0 - c)};
}

TruthValue revise(const TruthValue& a, const TruthValue& b) {
  if (b.w == 0.0) return a.w == 0.0 ? TruthValue::vacuous() : a;
  if (a.w == 0.0) return b;
  const double w = a.w + b.w;
  return {(a.f * a.w + b.f * b.w) / w, w};
}

TruthValue deduce(const TruthValue& a, const TruthValue& b) {
  const double f = a.f * b.f;
  return TruthValue::from_confidence(f, f * a.confidence() * b.confidence());
}

TruthValue conjoin(std::span<const TruthValue> premises) {
  if (premises.empty()) {
    throw Error(ErrorCode::EmptyPremiseList, "conjoin needs at least one premise");
  }
  if (premises.size() == 1) return premises.front();
  double f = 1.0;
  double c = 1.0;
  for (const auto& p : premises) {
    f *= p.f;
    c *= p.confidence();
  }
  return TruthValue::from_confidence(f, c);
}

double expectation(const TruthValue& t) { return t.confidence() * (t.f - 0.5) + 0.5; }

}  // namespace strata::nal
