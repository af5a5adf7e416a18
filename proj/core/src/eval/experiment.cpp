#include "strata/eval/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "detail/format.hpp"
#include "eval/json_io.hpp"
#include "strata/embed/walk.hpp"
#include "strata/error.hpp"
#include "strata/foa/run.hpp"
#include "strata/spatial/extract.hpp"

namespace strata::eval {

std::string_view to_string(FoAMode mode) {
  switch (mode) {
    case FoAMode::Both: return "both";
    case FoAMode::On: return "on";
    case FoAMode::Off: return "off";
  }
  return "?";
}

std::vector<scene::GenConfig> default_settings() {
  std::vector<scene::GenConfig> out;
  for (int shelves : {8, 16}) {
    for (double jitter : {kJitterLow, kJitterHigh}) {
      scene::GenConfig c;
      c.n_shelves = shelves;
      c.jitter_sigma = jitter;
      out.push_back(c);
    }
  }
  return out;
}

void ExperimentConfig::check() const {
  if (trials < 1) throw Error(ErrorCode::ConfigInvalid, "trials must be >= 1");
  if (settings.empty()) throw Error(ErrorCode::ConfigInvalid, "no settings");
  for (const auto& s : settings) scene::check_config(s);
  tolerances.check();
  foa_config.check();
  for (const auto& r : rules) nal::check_rule(r);
}

std::uint64_t cell_seed(std::uint64_t master, std::size_t setting, std::size_t trial) {
  return embed::walk_seed(master, static_cast<std::uint32_t>(setting),
                          static_cast<std::uint32_t>(trial));
}

namespace {

struct CellResult {
  Cell cell;
  std::map<std::string, Metrics> metrics;
};

CellResult run_cell(const ExperimentConfig& cfg, std::size_t s, std::size_t t) {
  CellResult r;
  r.cell.setting = s;
  r.cell.trial = t;
  r.cell.seed = cell_seed(cfg.master_seed, s, t);
  try {
    auto gen = cfg.settings[s];
    gen.rng_seed = r.cell.seed;
    const auto [scene, gt] = scene::generate_scene(gen);
    r.cell.rects = static_cast<int>(scene.rects.size());
    const auto graph = spatial::extract_relations(scene, cfg.tolerances);
    std::vector<std::pair<std::string, bool>> modes;
    if (cfg.foa != FoAMode::Off) modes.emplace_back("foa", true);
    if (cfg.foa != FoAMode::On) modes.emplace_back("whole", false);
    for (const auto& [name, use_foa] : modes) {
      const auto labeling =
          foa::run_on_graph(graph, scene, cfg.rules, cfg.foa_config, use_foa).first;
      const auto m = score(labeling, gt);
      r.cell.accuracy[name] = m.overall_accuracy;
      r.metrics[name] = m;
    }
  } catch (const Error& e) {
    throw Error(e.code(), "setting " + std::to_string(s) + ", trial " + std::to_string(t) + ": " +
                              e.what());
  }
  return r;
}

}  // namespace

Report run_experiment(const ExperimentConfig& cfg) {
  cfg.check();
  const std::size_t n_set = cfg.settings.size();
  const std::size_t n_trial = static_cast<std::size_t>(cfg.trials);
  const std::size_t total = n_set * n_trial;
  std::vector<CellResult> results(total);
  std::vector<std::exception_ptr> errors(total);
  const auto work = [&](std::size_t i) {
    try {
      results[i] = run_cell(cfg, i / n_trial, i % n_trial);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, total));
  if (threads == 1) {
    for (std::size_t i = 0; i < total; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) work(i);
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Report rep;
  rep.master_seed = cfg.master_seed;
  rep.trials = cfg.trials;
  rep.settings = cfg.settings;
  std::map<std::string, std::vector<const Metrics*>> by_mode;
  for (const auto& r : results) {
    rep.cells.push_back(r.cell);
    for (const auto& [mode, m] : r.metrics) by_mode[mode].push_back(&m);
  }
  for (const auto& [mode, ms] : by_mode) {
    ModeSummary sum;
    const double n = static_cast<double>(ms.size());
    sum.accuracy_min = 1.0;
    sum.accuracy_max = 0.0;
    for (const Metrics* m : ms) {
      sum.accuracy_mean += m->overall_accuracy / n;
      sum.accuracy_min = std::min(sum.accuracy_min, m->overall_accuracy);
      sum.accuracy_max = std::max(sum.accuracy_max, m->overall_accuracy);
      for (const auto& [label, c] : m->per_class) {
        auto& acc = sum.per_class[label];
        acc.precision += c.precision / n;
        acc.recall += c.recall / n;
        acc.f1 += c.f1 / n;
      }
    }
    sum.accuracy_mean = std::clamp(sum.accuracy_mean, sum.accuracy_min, sum.accuracy_max);
    rep.modes[mode] = sum;
  }
  return rep;
}

std::string save_report(const Report& rep) {
  nlohmann::json settings = nlohmann::json::array();
  for (const auto& s : rep.settings) settings.push_back(detail::to_json(s));
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : rep.cells) {
    cells.push_back({{"setting", c.setting},
                     {"trial", c.trial},
                     {"seed", c.seed},
                     {"rects", c.rects},
                     {"accuracy", c.accuracy}});
  }
  nlohmann::json modes = nlohmann::json::object();
  for (const auto& [mode, s] : rep.modes) {
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [l, c] : s.per_class) {
      per[std::string(scene::to_string(l))] = {
          {"precision", c.precision}, {"recall", c.recall}, {"f1", c.f1}};
    }
    modes[mode] = {{"per_class", std::move(per)},
                   {"accuracy", {{"mean", s.accuracy_mean},
                                 {"min", s.accuracy_min},
                                 {"max", s.accuracy_max}}}};
  }
  return strata::detail::dump({{"master_seed", rep.master_seed},
                               {"trials", rep.trials},
                               {"settings", std::move(settings)},
                               {"cells", std::move(cells)},
                               {"modes", std::move(modes)}});
}

Report load_report(std::string_view text) {
  namespace fd = strata::detail;
  const auto j = fd::parse_json(text, "report");
  Report rep;
  try {
    rep.master_seed = fd::require(j, "master_seed", "").get<std::uint64_t>();
    rep.trials = static_cast<int>(fd::require_integer(j, "trials", ""));
    const auto& settings = fd::require_array(j, "settings", "");
    for (std::size_t i = 0; i < settings.size(); ++i) {
      rep.settings.push_back(detail::gen_config_from(settings[i], "settings[" + std::to_string(i) + "]"));
    }
    const auto& cells = fd::require_array(j, "cells", "");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string path = "cells[" + std::to_string(i) + "]";
      Cell c;
      c.setting = static_cast<std::size_t>(fd::require_integer(cells[i], "setting", path));
      c.trial = static_cast<std::size_t>(fd::require_integer(cells[i], "trial", path));
      c.seed = fd::require(cells[i], "seed", path).get<std::uint64_t>();
      c.rects = static_cast<int>(fd::require_integer(cells[i], "rects", path));
      c.accuracy = fd::require(cells[i], "accuracy", path).get<std::map<std::string, double>>();
      rep.cells.push_back(std::move(c));
    }
    const auto& modes = fd::require(j, "modes", "");
    for (const auto& [mode, m] : modes.items()) {
      const std::string path = "modes." + mode;
      ModeSummary s;
      const auto& per = fd::require(m, "per_class", path);
      for (const auto& [label, c] : per.items()) {
        const auto l = scene::parse_label(label);
        if (!l) throw DocumentError(ErrorCode::MalformedDocument, 0, path + ".per_class." + label, "unknown label");
        const std::string cp = path + ".per_class." + label;
        s.per_class[*l] = {fd::require_number(c, "precision", cp), fd::require_number(c, "recall", cp),
                           fd::require_number(c, "f1", cp)};
      }
      const auto& acc = fd::require(m, "accuracy", path);
      s.accuracy_mean = fd::require_number(acc, "mean", path + ".accuracy");
      s.accuracy_min = fd::require_number(acc, "min", path + ".accuracy");
      s.accuracy_max = fd::require_number(acc, "max", path + ".accuracy");
      rep.modes[mode] = std::move(s);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(ErrorCode::MalformedDocument, 0, "<report>", e.what());
  }
  return rep;
}

}  // namespace strata::eval
