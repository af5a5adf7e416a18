#include "detail/format.hpp"

#include <cstdio>

#include "strata/error.hpp"

namespace strata::detail {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string quoted(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

nlohmann::json parse_json(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points one past the offending character.
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw DocumentError(ErrorCode::MalformedDocument, line_of_offset(text, offset), {},
                        std::string(what) + " is not valid JSON (" + e.what() + ")");
  }
}

namespace {
std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}
}  // namespace

const nlohmann::json& require(const nlohmann::json& obj, std::string_view key,
                              const std::string& path) {
  if (!obj.is_object()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, path.empty() ? "<root>" : path,
                        "expected an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, join(path, key), "missing field");
  }
  return *it;
}

double require_number(const nlohmann::json& obj, std::string_view key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_number()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, join(path, key), "expected a number");
  }
  return v.get<double>();
}

std::string require_string(const nlohmann::json& obj, std::string_view key,
                           const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_string()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, join(path, key), "expected a string");
  }
  return v.get<std::string>();
}

std::int64_t require_integer(const nlohmann::json& obj, std::string_view key,
                             const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_number_integer()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, join(path, key), "expected an integer");
  }
  return v.get<std::int64_t>();
}

const nlohmann::json& require_array(const nlohmann::json& obj, std::string_view key,
                                    const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_array()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, join(path, key), "expected an array");
  }
  return v;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace strata::detail
