#pragma once

#include <string>
#include <string_view>

#include "strata/embed/link.hpp"

namespace strata::embed {

/// One line per node, `id v1 ... vd`, six decimals, sorted by id.
std::string save_embedding(const EmbeddingSpace& space);
EmbeddingSpace load_embedding(std::string_view text);

std::string save_link_report(const LinkReport& report);
LinkReport load_link_report(std::string_view text);

}  // namespace strata::embed
