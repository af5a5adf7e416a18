#include "strata/nal/rules.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "strata/error.hpp"

namespace strata::nal {

namespace {

bool is_label_name(std::string_view p) {
  return p == "shelf" || p == "product" || p == "other";
}

[[noreturn]] void syntax(std::string_view line, const std::string& why) {
  throw Error(ErrorCode::RuleSyntaxError, why + " in '" + std::string(line) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

Atom parse_atom(std::string_view text, std::string_view line) {
  text = trim(text);
  Atom a;
  if (!text.empty() && text.front() == '!') {
    a.negated = true;
    text = trim(text.substr(1));
  }
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') syntax(line, "malformed atom");
  a.predicate = std::string(trim(text.substr(0, open)));
  if (!is_identifier(a.predicate)) syntax(line, "bad predicate name");
  std::string_view args = text.substr(open + 1, text.size() - open - 2);
  while (true) {
    auto comma = args.find(',');
    std::string_view arg = trim(args.substr(0, comma));
    if (!is_identifier(arg) || !std::isupper(static_cast<unsigned char>(arg[0]))) {
      syntax(line, "arguments must be variables");
    }
    a.args.emplace_back(arg);
    if (comma == std::string_view::npos) break;
    args = args.substr(comma + 1);
  }
  if (a.args.size() > 2) syntax(line, "atoms take one or two arguments");
  return a;
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

double parse_number(std::string_view s, std::string_view line) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) syntax(line, "bad number");
  return v;
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_atom(const Atom& a) {
  std::string s = a.negated ? "!" : "";
  s += a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) s += (i ? "," : "") + a.args[i];
  return s + ")";
}

}  // namespace

void check_rule(const Rule& r) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::RuleSyntaxError, r.id + ": " + why);
  };
  if (r.premises.empty()) fail("no premises");
  if (r.conclusions.empty()) fail("no conclusions");
  std::set<std::string> bound;
  for (const auto& p : r.premises) {
    if (is_label_name(p.predicate)) {
      if (p.negated) fail("label premises can not be negated");
      if (p.args.size() != 1) fail("label premises take one argument");
    } else if (!p.negated) {
      bound.insert(p.args.begin(), p.args.end());
    }
  }
  bool has_edge = false;
  for (const auto& p : r.premises) {
    if (!is_label_name(p.predicate) && !p.negated) has_edge = true;
    for (const auto& v : p.args) {
      if (!bound.count(v)) fail("variable " + v + " is not bound by a positive edge premise");
    }
  }
  if (!has_edge) fail("needs at least one positive edge premise");
  for (const auto& c : r.conclusions) {
    if (!is_label_name(c.predicate) || c.negated || c.args.size() != 1) {
      fail("conclusions must be positive label atoms");
    }
    if (!bound.count(c.args[0])) fail("conclusion variable " + c.args[0] + " is unbound");
  }
  if (!(r.prior.f >= 0.0 && r.prior.f <= 1.0) || !(r.prior.w >= 0.0)) fail("prior out of range");
}

Rule parse_rule(std::string_view line) {
  std::string_view s = trim(line);
  Rule r;
  auto colon = s.find(':');
  if (colon == std::string_view::npos) syntax(line, "missing rule id");
  r.id = std::string(trim(s.substr(0, colon)));
  if (!is_identifier(r.id)) syntax(line, "bad rule id");
  s = s.substr(colon + 1);

  auto at = s.rfind('@');
  if (at != std::string_view::npos) {
    std::string_view prior = trim(s.substr(at + 1));
    if (prior.size() < 2 || prior.front() != '{' || prior.back() != '}') {
      syntax(line, "prior must be {f w}");
    }
    prior = trim(prior.substr(1, prior.size() - 2));
    auto space = prior.find(' ');
    if (space == std::string_view::npos) syntax(line, "prior must be {f w}");
    r.prior = {parse_number(prior.substr(0, space), line), parse_number(prior.substr(space), line)};
    s = s.substr(0, at);
  }

  auto arrow = s.find("=>");
  if (arrow == std::string_view::npos) syntax(line, "missing =>");
  for (auto part : split_top(s.substr(0, arrow), '&')) r.premises.push_back(parse_atom(part, line));
  for (auto part : split_top(s.substr(arrow + 2), ',')) {
    r.conclusions.push_back(parse_atom(part, line));
  }
  check_rule(r);
  return r;
}

std::vector<Rule> parse_rules(std::string_view text) {
  std::vector<Rule> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_rule(line));
  }
  return out;
}

std::string format_rule(const Rule& r) {
  std::string s = r.id + ": ";
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    s += (i ? " & " : "") + format_atom(r.premises[i]);
  }
  s += " => ";
  for (std::size_t i = 0; i < r.conclusions.size(); ++i) {
    s += (i ? ", " : "") + format_atom(r.conclusions[i]);
  }
  return s + " @ {" + shortest(r.prior.f) + " " + shortest(r.prior.w) + "}";
}

std::string format_rules(const std::vector<Rule>& rules) {
  std::string out;
  for (const auto& r : rules) out += format_rule(r) + "\n";
  return out;
}

std::vector<Rule> default_rules() {
  return parse_rules(
      "R1: contains(A,B) & !floating(B) => shelf(A), product(B) @ {0.9 9}\n"
      "R2: aligned_v(A,S) & shelf(S) => shelf(A) @ {0.9 9}\n"
      "R3: aligned_h(A,P) & product(P) => product(A) @ {0.9 9}\n"
      "R4: on_top_of(A,P) & floating(A) & product(P) => product(A) @ {0.9 9}\n");
}

}  // namespace strata::nal
