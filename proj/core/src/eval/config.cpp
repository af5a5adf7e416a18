#include "strata/eval/config.hpp"

#include "detail/format.hpp"
#include "eval/json_io.hpp"
#include "strata/error.hpp"

namespace strata::eval {

namespace detail {

namespace {

using strata::detail::require_number;
using strata::detail::require_integer;

void read_number(const nlohmann::json& j, const char* key, const std::string& path, double& out) {
  if (j.contains(key)) out = require_number(j, key, path);
}

template <typename Int>
void read_integer(const nlohmann::json& j, const char* key, const std::string& path, Int& out) {
  if (j.contains(key)) out = static_cast<Int>(require_integer(j, key, path));
}

void require_object(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, path.empty() ? "<root>" : path,
                        "expected an object");
  }
}

}  // namespace

nlohmann::json to_json(const scene::GenConfig& c) {
  return {{"n_shelves", c.n_shelves},         {"products_min", c.products_min},
          {"products_max", c.products_max},   {"stack_prob", c.stack_prob},
          {"jitter_sigma", c.jitter_sigma},   {"spurious_rate", c.spurious_rate},
          {"dropout_rate", c.dropout_rate},   {"rng_seed", c.rng_seed}};
}

scene::GenConfig gen_config_from(const nlohmann::json& j, const std::string& path) {
  require_object(j, path);
  scene::GenConfig c;
  read_integer(j, "n_shelves", path, c.n_shelves);
  read_integer(j, "products_min", path, c.products_min);
  read_integer(j, "products_max", path, c.products_max);
  read_number(j, "stack_prob", path, c.stack_prob);
  read_number(j, "jitter_sigma", path, c.jitter_sigma);
  read_number(j, "spurious_rate", path, c.spurious_rate);
  read_number(j, "dropout_rate", path, c.dropout_rate);
  if (j.contains("rng_seed")) {
    const auto& v = j["rng_seed"];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw DocumentError(ErrorCode::MalformedDocument, 0,
                          path.empty() ? "rng_seed" : path + ".rng_seed",
                          "expected a non-negative integer");
    }
    c.rng_seed = v.get<std::uint64_t>();
  }
  return c;
}

nlohmann::json to_json(const spatial::Tolerances& t) {
  return {{"eps_contain", t.eps_contain},
          {"tau_align", t.tau_align},
          {"tau_gap", t.tau_gap},
          {"min_overlap", t.min_overlap},
          {"support_overlap", t.support_overlap}};
}

spatial::Tolerances tolerances_from(const nlohmann::json& j, const std::string& path) {
  require_object(j, path);
  spatial::Tolerances t;
  read_number(j, "eps_contain", path, t.eps_contain);
  read_number(j, "tau_align", path, t.tau_align);
  read_number(j, "tau_gap", path, t.tau_gap);
  read_number(j, "min_overlap", path, t.min_overlap);
  read_number(j, "support_overlap", path, t.support_overlap);
  return t;
}

}  // namespace detail

scene::GenConfig load_gen_config(std::string_view text) {
  auto c = detail::gen_config_from(strata::detail::parse_json(text, "generator config"), "");
  scene::check_config(c);
  return c;
}

std::string save_gen_config(const scene::GenConfig& cfg) {
  return strata::detail::dump(detail::to_json(cfg));
}

spatial::Tolerances load_tolerances(std::string_view text) {
  auto t = detail::tolerances_from(strata::detail::parse_json(text, "tolerances"), "");
  t.check();
  return t;
}

std::string save_tolerances(const spatial::Tolerances& tol) {
  return strata::detail::dump(detail::to_json(tol));
}

ExperimentConfig load_experiment_config(std::string_view text) {
  const auto j = strata::detail::parse_json(text, "experiment config");
  if (!j.is_object()) throw DocumentError(ErrorCode::MalformedDocument, 0, "<root>", "expected an object");
  ExperimentConfig cfg;
  if (j.contains("settings")) {
    const auto& s = strata::detail::require_array(j, "settings", "");
    cfg.settings.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      cfg.settings.push_back(detail::gen_config_from(s[i], "settings[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("trials")) cfg.trials = static_cast<int>(strata::detail::require_integer(j, "trials", ""));
  if (j.contains("foa")) {
    const auto m = strata::detail::require_string(j, "foa", "");
    if (m == "both") {
      cfg.foa = FoAMode::Both;
    } else if (m == "on") {
      cfg.foa = FoAMode::On;
    } else if (m == "off") {
      cfg.foa = FoAMode::Off;
    } else {
      throw DocumentError(ErrorCode::MalformedDocument, 0, "foa", "expected both, on or off");
    }
  }
  if (j.contains("master_seed")) {
    cfg.master_seed = static_cast<std::uint64_t>(strata::detail::require_integer(j, "master_seed", ""));
  }
  if (j.contains("tolerances")) cfg.tolerances = detail::tolerances_from(j["tolerances"], "tolerances");
  if (j.contains("rules")) cfg.rules = nal::parse_rules(strata::detail::require_string(j, "rules", ""));
  if (j.contains("K")) cfg.foa_config.K = static_cast<std::size_t>(strata::detail::require_integer(j, "K", ""));
  if (j.contains("seed_policy")) {
    const auto p = strata::detail::require_string(j, "seed_policy", "");
    if (p == "largest_container") {
      cfg.foa_config.seed_policy = foa::SeedPolicy::LargestContainer;
    } else if (p == "largest_any") {
      cfg.foa_config.seed_policy = foa::SeedPolicy::LargestAny;
    } else {
      throw DocumentError(ErrorCode::MalformedDocument, 0, "seed_policy",
                          "expected largest_container or largest_any");
    }
  }
  if (j.contains("neighbourhood")) {
    const auto n = strata::detail::require_string(j, "neighbourhood", "");
    if (n == "local") {
      cfg.foa_config.neighbourhood = foa::Neighbourhood::Local;
    } else if (n == "any") {
      cfg.foa_config.neighbourhood = foa::Neighbourhood::AnyRelation;
    } else {
      throw DocumentError(ErrorCode::MalformedDocument, 0, "neighbourhood", "expected local or any");
    }
  }
  if (j.contains("threads")) {
    cfg.threads = static_cast<std::size_t>(strata::detail::require_integer(j, "threads", ""));
  }
  cfg.check();
  return cfg;
}

}  // namespace strata::eval
