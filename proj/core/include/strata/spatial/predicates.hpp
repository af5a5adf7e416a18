#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "strata/kg/graph.hpp"
#include "strata/scene/scene.hpp"

namespace strata::spatial {

using scene::Rect;

/// Slack parameters, all fractions in [0, 1].
struct Tolerances {
  /// of the container's smaller extent
  double eps_contain = 0.01;
  /// of the larger extent of the pair
  double tau_align = 0.10;
  /// of the scene height
  double tau_gap = 0.01;
  /// horizontal overlap, of the narrower rect, for above/below
  double min_overlap = 0.30;
  /// horizontal overlap, of the narrower rect, for on_top_of/under
  double support_overlap = 0.50;

  /// Throws ConfigInvalid.
  void check() const;
  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

enum class Relation : std::uint8_t {
  inside,
  contains,
  aligned_h,
  aligned_v,
  above,
  below,
  on_left_of,
  on_right_of,
  on_top_of,
  under,
  floating,
};

inline constexpr std::array<Relation, 11> kAllRelations = {
    Relation::inside,     Relation::contains,    Relation::aligned_h, Relation::aligned_v,
    Relation::above,      Relation::below,       Relation::on_left_of, Relation::on_right_of,
    Relation::on_top_of,  Relation::under,       Relation::floating};

std::string_view to_string(Relation r);
std::optional<Relation> parse_relation(std::string_view s);
kg::SymmetryClass symmetry_of(Relation r);

/// Name of the distinguished L1 node that unary `floating` edges point to.
inline constexpr std::string_view kVoidNode = "void";

double horizontal_overlap(const Rect& a, const Rect& b);
double vertical_overlap(const Rect& a, const Rect& b);

// Binary predicates read as relation(a, b). Mirror predicates have their own
// definitions; none is computed by swapping the arguments of another.
bool contains(const Rect& a, const Rect& b, const Tolerances& tol);
bool inside(const Rect& a, const Rect& b, const Tolerances& tol);
bool aligned_h(const Rect& a, const Rect& b, const Tolerances& tol);
bool aligned_v(const Rect& a, const Rect& b, const Tolerances& tol);
bool above(const Rect& a, const Rect& b, const Tolerances& tol);
bool below(const Rect& a, const Rect& b, const Tolerances& tol);
bool on_top_of(const Rect& a, const Rect& b, const Tolerances& tol, double scene_height);
bool under(const Rect& a, const Rect& b, const Tolerances& tol, double scene_height);

struct Lateral {
  bool on_left_of = false;
  bool on_right_of = false;
};
/// on_left_of(a, b) and on_right_of(a, b), each from its own test.
Lateral lateral_relations(const Rect& a, const Rect& b, const Tolerances& tol);

}  // namespace strata::spatial
