#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace strata::kg {

enum class LevelTag : std::uint8_t { L0 = 0, L1 = 1, L2 = 2, LStar = 3 };

/// Level of abstraction. L2 carries an unbounded sublevel; the sublevel is
/// ignored (and normalised to 0) for every other tag.
struct Level {
  LevelTag tag = LevelTag::L0;
  std::uint32_t sublevel = 0;

  constexpr Level() = default;
  constexpr Level(LevelTag t, std::uint32_t sub = 0)
      : tag(t), sublevel(t == LevelTag::L2 ? sub : 0) {}

  static constexpr Level l0() { return {LevelTag::L0}; }
  static constexpr Level l1() { return {LevelTag::L1}; }
  static constexpr Level l2(std::uint32_t sub = 0) { return {LevelTag::L2, sub}; }
  static constexpr Level star() { return {LevelTag::LStar}; }

  friend constexpr auto operator<=>(const Level&, const Level&) = default;
};

enum class NodeKind : std::uint8_t { Percept, Concept, Goal };

/// Percepts live at L0/L1, goals only at L*, concepts anywhere above L0.
bool kind_allowed(NodeKind kind, Level level);

std::string_view to_string(LevelTag tag);
std::string_view to_string(NodeKind kind);
std::string to_string(Level level);
std::optional<LevelTag> parse_level_tag(std::string_view s);
std::optional<NodeKind> parse_node_kind(std::string_view s);

}  // namespace strata::kg
