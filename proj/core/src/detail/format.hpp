#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

namespace strata::detail {

/// Fixed six-decimal rendering; negative zero prints as "0.000000".
std::string fixed6(double v);

/// JSON string literal (quoted, escaped).
std::string quoted(std::string_view s);

/// 1-based line containing byte `offset` of `text`.
std::size_t line_of_offset(std::string_view text, std::size_t offset);

/// Parses JSON, rethrowing syntax errors as MalformedDocument with a line.
nlohmann::json parse_json(std::string_view text, std::string_view what);

/// Typed field access that throws MalformedDocument naming the field path.
const nlohmann::json& require(const nlohmann::json& obj, std::string_view key,
                              const std::string& path);
double require_number(const nlohmann::json& obj, std::string_view key, const std::string& path);
std::string require_string(const nlohmann::json& obj, std::string_view key,
                           const std::string& path);
std::int64_t require_integer(const nlohmann::json& obj, std::string_view key,
                             const std::string& path);
const nlohmann::json& require_array(const nlohmann::json& obj, std::string_view key,
                                    const std::string& path);

/// Canonical dump used by every JSON document emitted by the library.
std::string dump(const nlohmann::json& j);

}  // namespace strata::detail
