#pragma once

#include <string>
#include <string_view>

#include "strata/kg/graph.hpp"

namespace strata::kg {

inline constexpr int kGraphDocumentVersion = 1;

/// Canonical JSON: sorted keys, nodes by id, edges by (src, dst, relation),
/// abstractions by (higher, lower). Byte-identical for equal graphs.
std::string serialize(const KnowledgeGraph& graph);

/// Throws DocumentError(MalformedDocument) naming the line or field.
KnowledgeGraph deserialize(std::string_view text);

}  // namespace strata::kg
