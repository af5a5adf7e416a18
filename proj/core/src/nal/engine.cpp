#include "strata/nal/engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <tuple>

#include "strata/error.hpp"
#include "strata/spatial/predicates.hpp"

namespace strata::nal {

namespace {

int label_rank(Label l) {
  switch (l) {
    case Label::Product: return 2;
    case Label::Shelf: return 1;
    case Label::Other: return 0;
  }
  return 0;
}

auto claim_key(const Claim& c) {
  return std::make_tuple(expectation(c.truth), c.truth.confidence(), label_rank(c.label), c.truth.f,
                         c.truth.w);
}

std::optional<Label> label_of_predicate(std::string_view p) {
  if (p == "shelf") return Label::Shelf;
  if (p == "product") return Label::Product;
  if (p == "other") return Label::Other;
  return std::nullopt;
}

std::string label_predicate(Label l) {
  switch (l) {
    case Label::Shelf: return "shelf";
    case Label::Product: return "product";
    case Label::Other: return "other";
  }
  return "?";
}

struct Candidate {
  std::size_t rule = 0;
  std::size_t conclusion_slot = 0;
  std::vector<std::string> names;  // binding, in variable order
  std::vector<TruthValue> edge_truths;
  std::vector<std::string> edge_descs;
  std::vector<std::size_t> premises;  // statement indices
  std::size_t conclusion = 0;         // statement index
};

class Engine {
 public:
  Engine(const kg::KnowledgeGraph& g, const std::vector<Rule>& rules, const InferenceOptions& opt)
      : g_(g), rules_(rules), opt_(opt) {
    for (const auto& r : rules_) check_rule(r);
    void_node_ = g_.find_node(kg::Level::l1(), kg::NodeKind::Concept, spatial::kVoidNode);
  }

  Inference run();

 private:
  struct CompiledRule {
    std::vector<std::string> vars;
    std::vector<std::pair<const Atom*, std::vector<std::size_t>>> positive, negative, labels;
  };

  std::size_t statement(kg::NodeId node, Label label);
  CompiledRule compile(const Rule& r) const;
  void enumerate(std::size_t rule_index);
  void join(std::size_t rule_index, const CompiledRule& cr, std::size_t k,
            std::vector<std::optional<kg::NodeId>>& binding, std::vector<const kg::Edge*>& used);
  bool unary_holds(kg::NodeId a, const std::string& rel) const;
  bool depends_on(std::size_t from, std::size_t target) const;
  void evaluate();
  TruthValue candidate_truth(const Candidate& c) const;
  std::set<std::string> base_of(std::size_t s, std::vector<std::optional<std::set<std::string>>>& memo) const;

  const kg::KnowledgeGraph& g_;
  const std::vector<Rule>& rules_;
  const InferenceOptions& opt_;
  std::optional<kg::NodeId> void_node_;

  std::map<std::pair<kg::NodeId, Label>, std::size_t> stmt_index_;
  std::vector<std::pair<kg::NodeId, Label>> stmt_keys_;
  std::vector<Candidate> cands_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::vector<std::size_t>> deps_;
  std::vector<TruthValue> truth_;
};

std::size_t Engine::statement(kg::NodeId node, Label label) {
  auto [it, inserted] = stmt_index_.try_emplace({node, label}, stmt_keys_.size());
  if (inserted) stmt_keys_.emplace_back(node, label);
  return it->second;
}

Engine::CompiledRule Engine::compile(const Rule& r) const {
  CompiledRule cr;
  auto var_index = [&](const std::string& v) {
    auto it = std::find(cr.vars.begin(), cr.vars.end(), v);
    if (it != cr.vars.end()) return static_cast<std::size_t>(it - cr.vars.begin());
    cr.vars.push_back(v);
    return cr.vars.size() - 1;
  };
  for (const auto& p : r.premises) {
    if (label_of_predicate(p.predicate) || p.negated) continue;
    std::vector<std::size_t> idx;
    for (const auto& a : p.args) idx.push_back(var_index(a));
    cr.positive.emplace_back(&p, std::move(idx));
  }
  for (const auto& p : r.premises) {
    if (!label_of_predicate(p.predicate) && !p.negated) continue;
    std::vector<std::size_t> idx;
    for (const auto& a : p.args) idx.push_back(var_index(a));
    (p.negated ? cr.negative : cr.labels).emplace_back(&p, std::move(idx));
  }
  return cr;
}

bool Engine::unary_holds(kg::NodeId a, const std::string& rel) const {
  return void_node_ && g_.holds(a, rel, *void_node_);
}

void Engine::join(std::size_t rule_index, const CompiledRule& cr, std::size_t k,
                  std::vector<std::optional<kg::NodeId>>& binding,
                  std::vector<const kg::Edge*>& used) {
  if (k == cr.positive.size()) {
    for (const auto& [atom, idx] : cr.negative) {
      const kg::NodeId a = *binding[idx[0]];
      const bool present = idx.size() == 1 ? unary_holds(a, atom->predicate)
                                           : g_.holds(a, atom->predicate, *binding[idx[1]]);
      if (present) return;
    }
    const Rule& rule = rules_[rule_index];
    Candidate base;
    base.rule = rule_index;
    for (const auto& b : binding) base.names.push_back(g_.node(*b).name);
    for (const kg::Edge* e : used) {
      base.edge_truths.push_back(e->truth());
      const auto& dst = g_.node(e->dst);
      base.edge_descs.push_back(
          void_node_ && e->dst == *void_node_
              ? e->relation + "(" + g_.node(e->src).name + ")"
              : e->relation + "(" + g_.node(e->src).name + "," + dst.name + ")");
    }
    for (const auto& [atom, idx] : cr.labels) {
      base.premises.push_back(statement(*binding[idx[0]], *label_of_predicate(atom->predicate)));
    }
    for (std::size_t ci = 0; ci < rule.conclusions.size(); ++ci) {
      const Atom& c = rule.conclusions[ci];
      auto vi = std::find(cr.vars.begin(), cr.vars.end(), c.args[0]) - cr.vars.begin();
      Candidate cand = base;
      cand.conclusion_slot = ci;
      cand.conclusion = statement(*binding[vi], *label_of_predicate(c.predicate));
      cands_.push_back(std::move(cand));
    }
    return;
  }

  const auto& [atom, idx] = cr.positive[k];
  auto try_bind = [&](const kg::Edge& e, kg::NodeId a, kg::NodeId b) {
    std::array<kg::NodeId, 2> vals{a, b};
    std::vector<std::size_t> newly;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      auto& slot = binding[idx[i]];
      if (slot && *slot != vals[i]) {
        for (auto n : newly) binding[n].reset();
        return;
      }
      if (!slot) {
        slot = vals[i];
        newly.push_back(idx[i]);
      }
    }
    // a variable bound twice within one atom must agree with itself
    if (idx.size() == 2 && idx[0] == idx[1] && a != b) {
      for (auto n : newly) binding[n].reset();
      return;
    }
    used.push_back(&e);
    join(rule_index, cr, k + 1, binding, used);
    used.pop_back();
    for (auto n : newly) binding[n].reset();
  };

  for (const auto& e : g_.edges()) {
    if (e.relation != atom->predicate) continue;
    const bool to_void = void_node_ && e.dst == *void_node_;
    if (idx.size() == 1) {
      if (to_void) try_bind(e, e.src, e.src);
      continue;
    }
    if (to_void) continue;
    try_bind(e, e.src, e.dst);
    if (e.symmetry == kg::SymmetryClass::Symmetric) try_bind(e, e.dst, e.src);
  }
}

void Engine::enumerate(std::size_t rule_index) {
  const CompiledRule cr = compile(rules_[rule_index]);
  std::vector<std::optional<kg::NodeId>> binding(cr.vars.size());
  std::vector<const kg::Edge*> used;
  join(rule_index, cr, 0, binding, used);
}

bool Engine::depends_on(std::size_t from, std::size_t target) const {
  if (from == target) return true;
  std::vector<std::size_t> stack{from};
  std::vector<char> seen(stmt_keys_.size(), 0);
  seen[from] = 1;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t d : deps_[s]) {
      if (d == target) return true;
      if (!seen[d]) {
        seen[d] = 1;
        stack.push_back(d);
      }
    }
  }
  return false;
}

TruthValue Engine::candidate_truth(const Candidate& c) const {
  std::vector<TruthValue> premises = c.edge_truths;
  for (std::size_t p : c.premises) premises.push_back(truth_[p]);
  return deduce(conjoin(premises), rules_[c.rule].prior);
}

void Engine::evaluate() {
  // Admitted dependencies form a DAG; evaluate in post-order.
  const std::size_t n = stmt_keys_.size();
  std::vector<char> state(n, 0);  // 0 new, 1 open, 2 done
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [s, i] = stack.back();
      if (i < deps_[s].size()) {
        std::size_t d = deps_[s][i++];
        if (!state[d]) {
          state[d] = 1;
          stack.emplace_back(d, 0);
        }
        continue;
      }
      TruthValue t = TruthValue::vacuous();
      for (std::size_t c : supports_[s]) t = revise(t, candidate_truth(cands_[c]));
      truth_[s] = t;
      state[s] = 2;
      stack.pop_back();
    }
  }
}

std::set<std::string> Engine::base_of(std::size_t s,
                                      std::vector<std::optional<std::set<std::string>>>& memo) const {
  if (memo[s]) return *memo[s];
  std::set<std::string> out;
  for (std::size_t c : supports_[s]) {
    const auto& cand = cands_[c];
    out.insert(cand.edge_descs.begin(), cand.edge_descs.end());
    for (std::size_t p : cand.premises) {
      out.insert(label_predicate(stmt_keys_[p].second) + "(" + g_.node(stmt_keys_[p].first).name +
                 ")");
      auto sub = base_of(p, memo);
      out.insert(sub.begin(), sub.end());
    }
  }
  memo[s] = out;
  return out;
}

Inference Engine::run() {
  for (std::size_t r = 0; r < rules_.size(); ++r) enumerate(r);
  std::sort(cands_.begin(), cands_.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.rule, a.names, a.conclusion_slot) <
           std::tie(b.rule, b.names, b.conclusion_slot);
  });

  Inference out;
  out.instantiations = cands_.size();
  const std::size_t n = stmt_keys_.size();
  supports_.assign(n, {});
  deps_.assign(n, {});
  truth_.assign(n, TruthValue::vacuous());
  std::vector<char> status(cands_.size(), 0);  // 0 pending, 1 admitted, 2 blocked
  auto exists = [&](std::size_t s) { return !supports_[s].empty(); };

  std::size_t pass = 0;
  while (true) {
    if (pass == opt_.max_passes) {
      throw Error(ErrorCode::NonConvergence,
                  "no fixpoint after " + std::to_string(opt_.max_passes) + " passes");
    }
    ++pass;
    bool admitted_any = false;
    for (std::size_t ci = 0; ci < cands_.size(); ++ci) {
      if (status[ci]) continue;
      const Candidate& c = cands_[ci];
      if (!std::all_of(c.premises.begin(), c.premises.end(), exists)) continue;
      // Dependencies only grow, so a refusal is final.
      const bool circular = std::any_of(c.premises.begin(), c.premises.end(),
                                        [&](std::size_t p) { return depends_on(p, c.conclusion); });
      if (circular) {
        status[ci] = 2;
        ++out.blocked;
        continue;
      }
      status[ci] = 1;
      admitted_any = true;
      supports_[c.conclusion].push_back(ci);
      for (std::size_t p : c.premises) {
        auto& d = deps_[c.conclusion];
        if (std::find(d.begin(), d.end(), p) == d.end()) d.push_back(p);
      }
    }
    const std::vector<TruthValue> before = truth_;
    evaluate();
    double delta = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      delta = std::max({delta, std::abs(truth_[s].f - before[s].f),
                        std::abs(truth_[s].confidence() - before[s].confidence())});
    }
    if (!admitted_any && delta <= opt_.tolerance) break;
  }
  out.passes = pass;

  std::vector<std::optional<std::set<std::string>>> memo(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_tuple(std::cref(g_.node(stmt_keys_[a].first).name), stmt_keys_[a].second) <
           std::make_tuple(std::cref(g_.node(stmt_keys_[b].first).name), stmt_keys_[b].second);
  });
  for (std::size_t s : order) {
    if (!exists(s)) continue;
    Statement st;
    st.subject = g_.node(stmt_keys_[s].first).name;
    st.predicate = stmt_keys_[s].second;
    st.truth = truth_[s];
    st.derivations = supports_[s].size();
    if (opt_.collect_bases) st.base = base_of(s, memo);
    out.statements.push_back(std::move(st));
  }

  for (const auto& node : g_.nodes()) {
    if (node.kind != kg::NodeKind::Percept || node.level != kg::Level::l1()) continue;
    Claim best;
    for (Label l : scene::kAllLabels) {
      auto it = stmt_index_.find({node.id, l});
      if (it == stmt_index_.end() || !exists(it->second)) continue;
      best = choose(best, Claim{l, truth_[it->second]});
    }
    out.labeling.claims.emplace(node.name, best);
  }
  return out;
}

}  // namespace

const Claim& choose(const Claim& a, const Claim& b) {
  return claim_key(a) >= claim_key(b) ? a : b;
}

Inference infer(const kg::KnowledgeGraph& graph, const std::vector<Rule>& rules,
                const InferenceOptions& options) {
  Engine engine(graph, rules, options);
  return engine.run();
}

kg::KnowledgeGraph annotate(const kg::KnowledgeGraph& graph, const Labeling& labeling) {
  kg::KnowledgeGraph out = graph;
  std::map<Label, std::vector<kg::NodeId>> members;
  for (const auto& [id, claim] : labeling.claims) {
    if (auto n = out.find_node(kg::Level::l1(), kg::NodeKind::Percept, id)) {
      members[claim.label].push_back(*n);
    }
  }
  for (const auto& [label, nodes] : members) {
    out.abstract(label_predicate(label), kg::Level::l2(), nodes);
  }
  return out;
}

}  // namespace strata::nal
