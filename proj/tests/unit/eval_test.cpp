#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <set>

#include "strata/error.hpp"
#include "strata/eval/config.hpp"
#include "strata/eval/experiment.hpp"
#include "strata/eval/metrics.hpp"
#include "strata/eval/render.hpp"

using namespace strata;
using nal::Claim;
using nal::Labeling;
using scene::GroundTruth;
using scene::Label;

namespace {

Labeling labels(std::map<std::string, Label> m) {
  Labeling l;
  for (auto& [id, lab] : m) l.claims[id] = {lab, {1.0, 1.0}};
  return l;
}

std::size_t count(const std::string& s, const std::string& pat) {
  const std::regex re(pat);
  return std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator());
}

eval::ExperimentConfig small_config() {
  eval::ExperimentConfig cfg;
  cfg.settings.resize(2);
  cfg.settings[0].n_shelves = 3;
  cfg.settings[1].n_shelves = 4;
  cfg.settings[1].jitter_sigma = 0.01;
  cfg.trials = 3;
  cfg.master_seed = 5;
  return cfg;
}

}  // namespace

TEST(Score, Perfect) {
  const GroundTruth gt{{{"a", Label::Product}, {"b", Label::Shelf}, {"c", Label::Other}}};
  const auto m = eval::score(labels(gt.labels), gt);
  EXPECT_EQ(m.overall_accuracy, 1.0);
  EXPECT_EQ(m.n, 3);
  for (auto l : scene::kAllLabels) EXPECT_EQ(m.per_class.at(l), (eval::ClassMetrics{1, 1, 1}));
}

TEST(Score, HandConfusion) {
  const GroundTruth gt{{{"a", Label::Product}, {"b", Label::Product}, {"c", Label::Shelf}}};
  const auto m = eval::score(labels({{"a", Label::Product}, {"b", Label::Shelf}, {"c", Label::Shelf}}), gt);
  const auto& p = m.per_class.at(Label::Product);
  const auto& s = m.per_class.at(Label::Shelf);
  EXPECT_DOUBLE_EQ(p.precision, 1.0);
  EXPECT_DOUBLE_EQ(p.recall, 0.5);
  EXPECT_DOUBLE_EQ(p.f1, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
  EXPECT_DOUBLE_EQ(s.f1, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.overall_accuracy, 2.0 / 3.0);
  // rows: gt Shelf, Product, Other
  EXPECT_EQ(m.confusion, (eval::Confusion{{{1, 0, 0}, {1, 1, 0}, {0, 0, 0}}}));
}

TEST(Score, ZeroDenominators) {
  const GroundTruth gt{{{"a", Label::Shelf}, {"b", Label::Product}}};
  const auto m = eval::score(labels({{"a", Label::Product}, {"b", Label::Product}}), gt);
  EXPECT_EQ(m.per_class.at(Label::Shelf).precision, 0.0);
  EXPECT_EQ(m.per_class.at(Label::Shelf).recall, 0.0);
  EXPECT_EQ(m.per_class.at(Label::Shelf).f1, 0.0);
  EXPECT_EQ(m.per_class.at(Label::Other).recall, 0.0);
}

TEST(Score, UniverseMismatch) {
  const GroundTruth gt{{{"a", Label::Shelf}}};
  try {
    eval::score(labels({{"b", Label::Shelf}}), gt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UniverseMismatch);
  }
}

TEST(Score, RowSumsAndF1Consistency) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int k = 0; k < 200; ++k) {
    GroundTruth gt;
    Labeling pred;
    for (int i = 0; i < 20; ++i) {
      const auto id = "r" + std::to_string(i);
      gt.labels[id] = scene::kAllLabels[pick(rng)];
      pred.claims[id] = Claim{scene::kAllLabels[pick(rng)], {1, 1}};
    }
    const auto m = eval::score(pred, gt);
    int trace = 0;
    for (int r = 0; r < 3; ++r) {
      int row = 0;
      for (int c = 0; c < 3; ++c) row += m.confusion[r][c];
      int expect = 0;
      for (const auto& [id, l] : gt.labels) expect += int(l) == r;
      EXPECT_EQ(row, expect);
      trace += m.confusion[r][r];
    }
    EXPECT_DOUBLE_EQ(m.overall_accuracy, trace / 20.0);
    for (const auto& [l, c] : m.per_class) {
      const double h = c.precision + c.recall > 0 ? 2 * c.precision * c.recall / (c.precision + c.recall) : 0;
      EXPECT_DOUBLE_EQ(c.f1, h);
    }
  }
}

TEST(Metrics, RoundTrip) {
  const GroundTruth gt{{{"a", Label::Product}, {"b", Label::Product}, {"c", Label::Shelf}}};
  const auto m = eval::score(labels({{"a", Label::Product}, {"b", Label::Shelf}, {"c", Label::Shelf}}), gt);
  const auto text = eval::save_metrics(m);
  EXPECT_EQ(eval::save_metrics(eval::load_metrics(text)), text);
}

TEST(Render, Counts) {
  scene::Scene empty;
  empty.scene_id = "e";
  empty.width = 10;
  empty.height = 10;
  const auto a = eval::render(empty, {});
  EXPECT_EQ(count(a, "<svg"), 1u);
  EXPECT_EQ(count(a, "class=\"background\""), 1u);
  EXPECT_EQ(count(a, "class=\"outline\""), 0u);

  scene::Scene s = empty;
  s.rects = {{"a", 0, 0, 5, 5}, {"b", 1, 1, 1, 1}, {"c", 6, 6, 2, 2}};
  const auto lab = labels({{"a", Label::Shelf}, {"b", Label::Product}, {"c", Label::Shelf}});
  const GroundTruth gt{{{"a", Label::Shelf}, {"b", Label::Product}, {"c", Label::Other}}};
  const auto b = eval::render(s, lab, &gt);
  EXPECT_EQ(count(b, "class=\"outline\""), 3u);
  EXPECT_EQ(count(b, "stroke-dasharray"), 1u);
  EXPECT_EQ(count(b, "data-id=\"c\"[^>]*stroke-dasharray"), 1u);
  EXPECT_EQ(count(eval::render(s, lab), "stroke-dasharray"), 0u);
  EXPECT_EQ(eval::render(s, lab, &gt), b);
}

TEST(Experiment, CleanSettingIsExact) {
  eval::ExperimentConfig cfg;
  cfg.settings.resize(1);
  cfg.settings[0].n_shelves = 4;
  cfg.settings[0].spurious_rate = 0;
  cfg.settings[0].dropout_rate = 0;
  cfg.trials = 1;
  const auto r = eval::run_experiment(cfg);
  EXPECT_EQ(r.modes.at("foa").accuracy_mean, 1.0);
  EXPECT_EQ(r.modes.at("whole").accuracy_mean, 1.0);
}

TEST(Experiment, DeterministicAndOrdered) {
  auto cfg = small_config();
  const auto a = eval::save_report(eval::run_experiment(cfg));
  cfg.threads = 3;
  const auto r = eval::run_experiment(cfg);
  EXPECT_EQ(eval::save_report(r), a);
  ASSERT_EQ(r.cells.size(), 6u);
  for (std::size_t i = 1; i < r.cells.size(); ++i) {
    EXPECT_LT(std::tie(r.cells[i - 1].setting, r.cells[i - 1].trial),
              std::tie(r.cells[i].setting, r.cells[i].trial));
  }
  for (const auto& [mode, m] : r.modes) {
    EXPECT_LE(m.accuracy_min, m.accuracy_mean);
    EXPECT_LE(m.accuracy_mean, m.accuracy_max);
  }
}

TEST(Experiment, SingleMode) {
  auto cfg = small_config();
  cfg.foa = eval::FoAMode::On;
  const auto r = eval::run_experiment(cfg);
  EXPECT_EQ(r.modes.size(), 1u);
  EXPECT_TRUE(r.modes.count("foa"));
}

TEST(Experiment, ReportRoundTrip) {
  const auto text = eval::save_report(eval::run_experiment(small_config()));
  EXPECT_EQ(eval::save_report(eval::load_report(text)), text);
}

TEST(Experiment, DefaultSettings) {
  const auto s = eval::default_settings();
  ASSERT_EQ(s.size(), 4u);
  std::set<std::pair<int, double>> distinct;
  for (const auto& g : s) distinct.emplace(g.n_shelves, g.jitter_sigma);
  EXPECT_EQ(distinct.size(), 4u);
}

TEST(Config, ExperimentDocument) {
  const auto cfg = eval::load_experiment_config(
      R"({"trials": 2, "foa": "off", "master_seed": 9, "K": 5, "seed_policy": "largest_any",
          "settings": [{"n_shelves": 3}], "rules": "R1: contains(A,B) => shelf(A) @ {0.8 4}\n"})");
  EXPECT_EQ(cfg.trials, 2);
  EXPECT_EQ(cfg.foa, eval::FoAMode::Off);
  EXPECT_EQ(cfg.master_seed, 9u);
  EXPECT_EQ(cfg.foa_config.K, 5u);
  EXPECT_EQ(cfg.foa_config.seed_policy, foa::SeedPolicy::LargestAny);
  ASSERT_EQ(cfg.settings.size(), 1u);
  EXPECT_EQ(cfg.settings[0].n_shelves, 3);
  ASSERT_EQ(cfg.rules.size(), 1u);
  EXPECT_EQ(cfg.rules[0].prior, (nal::TruthValue{0.8, 4}));
  EXPECT_THROW(eval::load_experiment_config(R"({"trials": 0})"), Error);
  EXPECT_THROW(eval::load_experiment_config("{"), DocumentError);
}

TEST(Config, GenAndTolerancesRoundTrip) {
  scene::GenConfig g;
  g.n_shelves = 5;
  g.jitter_sigma = 0.02;
  EXPECT_EQ(eval::load_gen_config(eval::save_gen_config(g)), g);
  spatial::Tolerances t;
  t.tau_gap = 0.02;
  EXPECT_EQ(eval::load_tolerances(eval::save_tolerances(t)), t);
}
