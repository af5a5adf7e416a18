#include "strata/spatial/predicates.hpp"

#include <algorithm>
#include <cmath>

#include "strata/error.hpp"

namespace strata::spatial {

void Tolerances::check() const {
  for (double v : {eps_contain, tau_align, tau_gap, min_overlap, support_overlap}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::ConfigInvalid, "tolerances must lie in [0, 1]");
    }
  }
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::inside: return "inside";
    case Relation::contains: return "contains";
    case Relation::aligned_h: return "aligned_h";
    case Relation::aligned_v: return "aligned_v";
    case Relation::above: return "above";
    case Relation::below: return "below";
    case Relation::on_left_of: return "on_left_of";
    case Relation::on_right_of: return "on_right_of";
    case Relation::on_top_of: return "on_top_of";
    case Relation::under: return "under";
    case Relation::floating: return "floating";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view s) {
  for (Relation r : kAllRelations) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

kg::SymmetryClass symmetry_of(Relation r) {
  return (r == Relation::aligned_h || r == Relation::aligned_v) ? kg::SymmetryClass::Symmetric
                                                                 : kg::SymmetryClass::AntiSymmetric;
}

double horizontal_overlap(const Rect& a, const Rect& b) {
  return std::max(0.0, std::min(a.right(), b.right()) - std::max(a.left(), b.left()));
}

double vertical_overlap(const Rect& a, const Rect& b) {
  return std::max(0.0, std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top()));
}

bool contains(const Rect& a, const Rect& b, const Tolerances& tol) {
  const double eps = tol.eps_contain * std::min(a.w, a.h);
  return a.x - eps <= b.x && b.x + b.w <= a.x + a.w + eps && a.y - eps <= b.y &&
         b.y + b.h <= a.y + a.h + eps && a.area() > b.area();
}

bool inside(const Rect& a, const Rect& b, const Tolerances& tol) {
  // a sits within b's bounds widened by b's slack.
  const double eps = tol.eps_contain * std::min(b.w, b.h);
  return a.x >= b.x - eps && a.x + a.w <= b.x + b.w + eps && a.y >= b.y - eps &&
         a.y + a.h <= b.y + b.h + eps && a.area() < b.area();
}

bool aligned_h(const Rect& a, const Rect& b, const Tolerances& tol) {
  return std::abs(a.bottom() - b.bottom()) <= tol.tau_align * std::max(a.h, b.h) &&
         vertical_overlap(a, b) >= 0.5 * std::min(a.h, b.h) && !contains(a, b, tol) &&
         !contains(b, a, tol);
}

bool aligned_v(const Rect& a, const Rect& b, const Tolerances& tol) {
  const double slack = tol.tau_align * std::max(a.w, b.w);
  return std::abs(a.x - b.x) <= slack && std::abs(a.right() - b.right()) <= slack &&
         !contains(a, b, tol) && !contains(b, a, tol);
}

bool above(const Rect& a, const Rect& b, const Tolerances& tol) {
  return a.bottom() <= b.top() && horizontal_overlap(a, b) >= tol.min_overlap * std::min(a.w, b.w);
}

bool below(const Rect& a, const Rect& b, const Tolerances& tol) {
  return a.top() >= b.bottom() && horizontal_overlap(a, b) >= tol.min_overlap * std::min(a.w, b.w);
}

bool on_top_of(const Rect& a, const Rect& b, const Tolerances& tol, double scene_height) {
  return above(a, b, tol) && b.top() - a.bottom() <= tol.tau_gap * scene_height &&
         horizontal_overlap(a, b) >= tol.support_overlap * std::min(a.w, b.w);
}

bool under(const Rect& a, const Rect& b, const Tolerances& tol, double scene_height) {
  return below(a, b, tol) && a.top() - b.bottom() <= tol.tau_gap * scene_height &&
         horizontal_overlap(a, b) >= tol.support_overlap * std::min(a.w, b.w);
}

Lateral lateral_relations(const Rect& a, const Rect& b, const Tolerances& /*tol*/) {
  const bool rows_overlap = vertical_overlap(a, b) >= 0.5 * std::min(a.h, b.h);
  return {rows_overlap && a.right() <= b.x, rows_overlap && a.x >= b.right()};
}

}  // namespace strata::spatial
