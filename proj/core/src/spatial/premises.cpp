#include "strata/spatial/premises.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <regex>

#include "detail/format.hpp"
#include "strata/error.hpp"
#include "strata/spatial/predicates.hpp"

namespace strata::spatial {

namespace {

double at_text_precision(double v) { return std::strtod(detail::fixed6(v).c_str(), nullptr); }

std::string format_weight(double w) {
  if (w == std::floor(w) && w < 1e15) return std::to_string(static_cast<long long>(w));
  return detail::fixed6(w);
}

std::string format_truth(const nal::TruthValue& t) {
  return "{" + detail::fixed6(t.f) + " " + format_weight(t.w) + "}";
}

}  // namespace

std::string format_premise(const Premise& p) {
  switch (p.kind) {
    case Premise::Kind::Relation:
      return "<(" + p.subject + "," + p.object + ") --> " + p.predicate + ">. " +
             format_truth(p.truth);
    case Premise::Kind::Unary:
      return "<" + p.subject + " --> [" + p.predicate + "]>. " + format_truth(p.truth);
    case Premise::Kind::Attribute:
      return "<" + p.subject + " --> [" + p.predicate + "=" + detail::fixed6(p.value) + "]>. " +
             format_truth(p.truth);
  }
  return {};
}

std::vector<Premise> premises_of(const kg::KnowledgeGraph& g) {
  std::vector<Premise> out;
  for (const auto& e : g.edges()) {
    Premise p;
    const auto t = e.truth();
    p.truth = {at_text_precision(t.f), t.w == std::floor(t.w) ? t.w : at_text_precision(t.w)};
    p.subject = g.node(e.src).name;
    p.predicate = e.relation;
    const auto& dst = g.node(e.dst);
    if (dst.name == kVoidNode && dst.kind == kg::NodeKind::Concept) {
      p.kind = Premise::Kind::Unary;
    } else {
      p.kind = Premise::Kind::Relation;
      p.object = dst.name;
    }
    out.push_back(std::move(p));
  }
  for (const auto& n : g.nodes()) {
    if (n.kind != kg::NodeKind::Percept || n.level != kg::Level::l1()) continue;
    for (std::string_view attr : kPremiseAttributes) {
      auto it = n.attrs.find(std::string(attr));
      if (it == n.attrs.end()) continue;
      Premise p;
      p.kind = Premise::Kind::Attribute;
      p.subject = n.name;
      p.predicate = std::string(attr);
      p.value = at_text_precision(it->second);
      out.push_back(std::move(p));
    }
  }
  std::vector<std::pair<std::string, Premise>> keyed;
  keyed.reserve(out.size());
  for (auto& p : out) keyed.emplace_back(format_premise(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [line, p] : keyed) out.push_back(std::move(p));
  return out;
}

std::string format_premises(std::vector<Premise> premises) {
  std::vector<std::string> lines;
  lines.reserve(premises.size());
  for (const auto& p : premises) lines.push_back(format_premise(p));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string to_premises(const kg::KnowledgeGraph& graph) { return format_premises(premises_of(graph)); }

std::vector<Premise> parse_premises(std::string_view text) {
  static const std::string id = R"(([A-Za-z0-9_.:\-]+))";
  static const std::string num = R"(([0-9]+(?:\.[0-9]+)?))";
  static const std::string truth = R"(\{)" + num + " " + num + R"(\})";
  static const std::regex relation_re("<\\(" + id + "," + id + "\\) --> " + id + ">\\. " + truth);
  static const std::regex attr_re("<" + id + " --> \\[" + id + "=(-?[0-9]+(?:\\.[0-9]+)?)\\]>\\. " +
                                  truth);
  static const std::regex unary_re("<" + id + " --> \\[" + id + "\\]>\\. " + truth);

  std::vector<Premise> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::smatch m;
    Premise p;
    auto to_d = [](const std::ssub_match& s) { return std::strtod(s.str().c_str(), nullptr); };
    if (std::regex_match(line, m, relation_re)) {
      p.kind = Premise::Kind::Relation;
      p.subject = m[1];
      p.object = m[2];
      p.predicate = m[3];
      p.truth = {to_d(m[4]), to_d(m[5])};
    } else if (std::regex_match(line, m, attr_re)) {
      p.kind = Premise::Kind::Attribute;
      p.subject = m[1];
      p.predicate = m[2];
      p.value = to_d(m[3]);
      p.truth = {to_d(m[4]), to_d(m[5])};
    } else if (std::regex_match(line, m, unary_re)) {
      p.kind = Premise::Kind::Unary;
      p.subject = m[1];
      p.predicate = m[2];
      p.truth = {to_d(m[3]), to_d(m[4])};
    } else {
      throw DocumentError(ErrorCode::PremiseSyntaxError, line_no, {},
                          "unrecognised premise '" + line + "'");
    }
    if (p.truth.f > 1.0) {
      throw DocumentError(ErrorCode::PremiseSyntaxError, line_no, {}, "frequency above 1");
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace strata::spatial
