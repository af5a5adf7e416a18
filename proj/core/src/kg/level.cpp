#include "strata/kg/level.hpp"

namespace strata::kg {

bool kind_allowed(NodeKind kind, Level level) {
  switch (kind) {
    case NodeKind::Percept:
      return level.tag == LevelTag::L0 || level.tag == LevelTag::L1;
    case NodeKind::Goal:
      return level.tag == LevelTag::LStar;
    case NodeKind::Concept:
      return level.tag != LevelTag::L0;
  }
  return false;
}

std::string_view to_string(LevelTag tag) {
  switch (tag) {
    case LevelTag::L0: return "L0";
    case LevelTag::L1: return "L1";
    case LevelTag::L2: return "L2";
    case LevelTag::LStar: return "L*";
  }
  return "?";
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Percept: return "Percept";
    case NodeKind::Concept: return "Concept";
    case NodeKind::Goal: return "Goal";
  }
  return "?";
}

std::string to_string(Level level) {
  std::string s(to_string(level.tag));
  if (level.tag == LevelTag::L2) s += "." + std::to_string(level.sublevel);
  return s;
}

std::optional<LevelTag> parse_level_tag(std::string_view s) {
  if (s == "L0") return LevelTag::L0;
  if (s == "L1") return LevelTag::L1;
  if (s == "L2") return LevelTag::L2;
  if (s == "L*") return LevelTag::LStar;
  return std::nullopt;
}

std::optional<NodeKind> parse_node_kind(std::string_view s) {
  if (s == "Percept") return NodeKind::Percept;
  if (s == "Concept") return NodeKind::Concept;
  if (s == "Goal") return NodeKind::Goal;
  return std::nullopt;
}

}  // namespace strata::kg
