#include "strata/kg/document.hpp"

#include <algorithm>

#include "detail/format.hpp"
#include "strata/error.hpp"

namespace strata::kg {

using nlohmann::json;

std::string serialize(const KnowledgeGraph& g) {
  json doc;
  doc["version"] = kGraphDocumentVersion;
  doc["strict_levels"] = g.options().strict_levels;

  json relations = json::array();
  for (const auto& [name, info] : g.relations()) {
    relations.push_back(
        {{"name", name}, {"symmetry", to_string(info.symmetry)}, {"reflexive", info.reflexive}});
  }
  doc["relations"] = std::move(relations);

  json nodes = json::array();
  for (const auto& n : g.nodes()) {
    json jn = {{"id", n.id.value},
               {"name", n.name},
               {"level", to_string(n.level.tag)},
               {"sublevel", n.level.sublevel},
               {"kind", to_string(n.kind)}};
    if (!n.attrs.empty()) jn["attrs"] = n.attrs;
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);

  std::vector<const Edge*> edges;
  for (const auto& e : g.edges()) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(), [](const Edge* a, const Edge* b) {
    return std::tie(a->src, a->dst, a->relation) < std::tie(b->src, b->dst, b->relation);
  });
  json jedges = json::array();
  for (const Edge* e : edges) {
    const auto t = e->truth();
    json evidence = json::array();
    json tags = json::array();
    for (const auto& [tag, ev] : e->evidence) {
      evidence.push_back({{"tag", tag}, {"f", ev.f}, {"w", ev.w}});
      tags.push_back(tag);
    }
    jedges.push_back({{"src", e->src.value},
                      {"dst", e->dst.value},
                      {"relation", e->relation},
                      {"symmetry", to_string(e->symmetry)},
                      {"f", t.f},
                      {"w", t.w},
                      {"tags", std::move(tags)},
                      {"evidence", std::move(evidence)}});
  }
  doc["edges"] = std::move(jedges);

  std::vector<AbstractionEdge> abs(g.abstractions().begin(), g.abstractions().end());
  std::sort(abs.begin(), abs.end());
  json jabs = json::array();
  for (const auto& a : abs) jabs.push_back({{"higher", a.higher.value}, {"lower", a.lower.value}});
  doc["abstractions"] = std::move(jabs);

  return detail::dump(doc);
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw DocumentError(ErrorCode::MalformedDocument, 0, field, msg);
}

NodeId node_ref(const json& obj, std::string_view key, const std::string& path,
                std::size_t node_count) {
  auto v = detail::require_integer(obj, key, path);
  if (v < 0 || static_cast<std::size_t>(v) >= node_count) {
    fail(path + "." + std::string(key), "node id " + std::to_string(v) + " out of range");
  }
  return NodeId{static_cast<std::uint32_t>(v)};
}

}  // namespace

KnowledgeGraph deserialize(std::string_view text) {
  const json doc = detail::parse_json(text, "graph document");
  if (detail::require_integer(doc, "version", "") != kGraphDocumentVersion) {
    fail("version", "unsupported version");
  }
  GraphOptions opts;
  if (auto it = doc.find("strict_levels"); it != doc.end()) {
    if (!it->is_boolean()) fail("strict_levels", "expected a boolean");
    opts.strict_levels = it->get<bool>();
  }
  KnowledgeGraph g(opts);

  if (auto it = doc.find("relations"); it != doc.end()) {
    if (!it->is_array()) fail("relations", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "relations[" + std::to_string(i) + "]";
      const auto& r = (*it)[i];
      auto sym = parse_symmetry(detail::require_string(r, "symmetry", path));
      if (!sym) fail(path + ".symmetry", "unknown symmetry class");
      bool reflexive = false;
      if (auto rf = r.find("reflexive"); rf != r.end() && rf->is_boolean()) reflexive = *rf;
      try {
        g.register_relation(detail::require_string(r, "name", path), *sym, reflexive);
      } catch (const Error& e) {
        fail(path, e.what());
      }
    }
  }

  const auto& nodes = detail::require_array(doc, "nodes", "");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "nodes[" + std::to_string(i) + "]";
    const auto& jn = nodes[i];
    if (detail::require_integer(jn, "id", path) != static_cast<std::int64_t>(i)) {
      fail(path + ".id", "node ids must be dense and ordered");
    }
    auto tag = parse_level_tag(detail::require_string(jn, "level", path));
    if (!tag) fail(path + ".level", "unknown level");
    auto sub = detail::require_integer(jn, "sublevel", path);
    if (sub < 0 || sub > UINT32_MAX) fail(path + ".sublevel", "out of range");
    auto kind = parse_node_kind(detail::require_string(jn, "kind", path));
    if (!kind) fail(path + ".kind", "unknown node kind");
    Attributes attrs;
    if (auto a = jn.find("attrs"); a != jn.end()) {
      if (!a->is_object()) fail(path + ".attrs", "expected an object");
      for (const auto& [k, v] : a->items()) {
        if (!v.is_number()) fail(path + ".attrs." + k, "expected a number");
        attrs.emplace(k, v.get<double>());
      }
    }
    std::size_t before = g.node_count();
    try {
      g.add_node(Level(*tag, static_cast<std::uint32_t>(sub)), *kind,
                 detail::require_string(jn, "name", path), std::move(attrs));
    } catch (const DocumentError&) {
      throw;
    } catch (const Error& e) {
      fail(path, e.what());
    }
    if (g.node_count() == before) fail(path, "duplicate node");
  }

  const auto& edges = detail::require_array(doc, "edges", "");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    const auto& je = edges[i];
    NodeId src = node_ref(je, "src", path, g.node_count());
    NodeId dst = node_ref(je, "dst", path, g.node_count());
    std::string rel = detail::require_string(je, "relation", path);
    auto sym = parse_symmetry(detail::require_string(je, "symmetry", path));
    if (!sym) fail(path + ".symmetry", "unknown symmetry class");
    const auto& ev = detail::require_array(je, "evidence", path);
    if (ev.empty()) fail(path + ".evidence", "edge without evidence");
    for (std::size_t k = 0; k < ev.size(); ++k) {
      const std::string epath = path + ".evidence[" + std::to_string(k) + "]";
      nal::TruthValue t{detail::require_number(ev[k], "f", epath),
                        detail::require_number(ev[k], "w", epath)};
      if (!(t.f >= 0.0 && t.f <= 1.0) || !(t.w >= 0.0)) fail(epath, "truth value out of range");
      try {
        g.assert_relation(src, rel, dst, *sym, t, detail::require_string(ev[k], "tag", epath));
      } catch (const DocumentError&) {
        throw;
      } catch (const Error& e) {
        fail(path, e.what());
      }
    }
  }

  const auto& abs = detail::require_array(doc, "abstractions", "");
  for (std::size_t i = 0; i < abs.size(); ++i) {
    const std::string path = "abstractions[" + std::to_string(i) + "]";
    g.add_abstraction(node_ref(abs[i], "higher", path, g.node_count()),
                      node_ref(abs[i], "lower", path, g.node_count()));
  }
  return g;
}

}  // namespace strata::kg
