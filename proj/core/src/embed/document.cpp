#include "strata/embed/document.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "detail/format.hpp"
#include "strata/error.hpp"

namespace strata::embed {

std::string save_embedding(const EmbeddingSpace& space) {
  std::string out;
  for (const auto& [id, v] : space.vectors) {
    out += id;
    for (double x : v) {
      out += ' ';
      out += detail::fixed6(x);
    }
    out += '\n';
  }
  return out;
}

EmbeddingSpace load_embedding(std::string_view text) {
  EmbeddingSpace space;
  space.dim = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string id, tok;
    fields >> id;
    std::vector<double> v;
    while (fields >> tok) {
      char* end = nullptr;
      const double x = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0' || !std::isfinite(x)) {
        throw DocumentError(ErrorCode::MalformedDocument, lineno, id, "bad coordinate '" + tok + "'");
      }
      v.push_back(x);
    }
    if (v.empty()) throw DocumentError(ErrorCode::MalformedDocument, lineno, id, "no coordinates");
    if (space.dim == 0) space.dim = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != space.dim) {
      throw DocumentError(ErrorCode::MalformedDocument, lineno, id, "dimension differs from line 1");
    }
    if (!space.vectors.emplace(id, std::move(v)).second) {
      throw DocumentError(ErrorCode::MalformedDocument, lineno, id, "duplicate node id");
    }
  }
  if (space.dim == 0) space.dim = 2;
  return space;
}

std::string save_link_report(const LinkReport& r) {
  nlohmann::json line;
  if (r.line.vertical) {
    line = {{"vertical", r.line.x0}};
  } else {
    line = {{"a", r.line.a}, {"b", r.line.b}};
  }
  nlohmann::json members = nlohmann::json::array();
  for (const auto& [id, q] : r.members) members.push_back({{"id", id}, {"quadrant", q}});
  nlohmann::json j = {{"n1", r.n1},
                      {"n2", r.n2},
                      {"line", std::move(line)},
                      {"eps_initial", r.eps_initial},
                      {"eps_final", r.eps_final},
                      {"max_eps", r.max_eps},
                      {"members", std::move(members)},
                      {"quadrant_counts", r.quadrant_counts},
                      {"guard_tripped", r.guard_tripped}};
  j["skew_index"] = r.skew_index ? nlohmann::json(*r.skew_index) : nlohmann::json(nullptr);
  return detail::dump(j);
}

LinkReport load_link_report(std::string_view text) {
  const auto j = detail::parse_json(text, "link report");
  LinkReport r;
  r.n1 = detail::require_string(j, "n1", "");
  r.n2 = detail::require_string(j, "n2", "");
  const auto& line = detail::require(j, "line", "");
  if (line.contains("vertical")) {
    r.line = {true, 0.0, 0.0, detail::require_number(line, "vertical", "line")};
  } else {
    r.line = {false, detail::require_number(line, "a", "line"),
              detail::require_number(line, "b", "line"), 0.0};
  }
  r.eps_initial = detail::require_number(j, "eps_initial", "");
  r.eps_final = detail::require_number(j, "eps_final", "");
  r.max_eps = detail::require_number(j, "max_eps", "");
  const auto& members = detail::require_array(j, "members", "");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string path = "members[" + std::to_string(i) + "]";
    r.members.emplace(detail::require_string(members[i], "id", path),
                      static_cast<int>(detail::require_integer(members[i], "quadrant", path)));
  }
  const auto& counts = detail::require_array(j, "quadrant_counts", "");
  if (counts.size() != 4) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, "quadrant_counts", "expected 4 counts");
  }
  for (std::size_t k = 0; k < 4; ++k) r.quadrant_counts[k] = counts[k].get<int>();
  const auto& skew = detail::require(j, "skew_index", "");
  if (!skew.is_null()) r.skew_index = skew.get<double>();
  r.guard_tripped = detail::require(j, "guard_tripped", "").get<bool>();
  return r;
}

}  // namespace strata::embed
