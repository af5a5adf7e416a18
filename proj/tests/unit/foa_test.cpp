#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "strata/error.hpp"
#include "strata/foa/covers.hpp"
#include "strata/foa/run.hpp"
#include "strata/nal/rules.hpp"
#include "strata/scene/generator.hpp"
#include "strata/spatial/extract.hpp"

using namespace strata;
using nal::Claim;
using nal::Labeling;
using nal::TruthValue;
using scene::Label;

namespace {

scene::Scene make_scene(std::vector<scene::Rect> rects) {
  scene::Scene s;
  s.scene_id = "t";
  s.width = 1000;
  s.height = 1000;
  s.rects = std::move(rects);
  return s;
}

Claim claim_with_e(Label l, double e) {
  // f = 1, so e = c/2 + 1/2.
  return {l, TruthValue::from_confidence(1.0, 2 * e - 1)};
}

scene::Scene noisy(int shelves, std::uint64_t seed) {
  scene::GenConfig cfg;
  cfg.n_shelves = shelves;
  cfg.jitter_sigma = 0.005;
  cfg.rng_seed = seed;
  return scene::generate_scene(cfg).first;
}

}  // namespace

TEST(Covers, ThreeRectTrace) {
  // Areas 100, 50, 20 with bottoms on one line: every pair is aligned_h.
  const auto s = make_scene({{"a", 0, 0, 10, 10}, {"b", 20, 5, 10, 5}, {"c", 40, 8, 10, 2}});
  const auto g = spatial::extract_relations(s);
  ASSERT_TRUE(g.holds(*g.find_by_name("a"), "aligned_h", *g.find_by_name("c")));
  foa::FoAConfig cfg;
  cfg.K = 2;
  const auto covers = foa::build_covers(g, s, cfg);
  ASSERT_GE(covers.size(), 1u);
  EXPECT_EQ(covers[0].seed, "a");
  EXPECT_EQ(covers[0].members, (std::vector<std::string>{"a", "b"}));
  // c is still uncovered, so b seeds next and then c.
  ASSERT_EQ(covers.size(), 3u);
  EXPECT_EQ(covers[1].members, (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(covers[2].members, (std::vector<std::string>{"c", "a"}));
}

TEST(Covers, ContainerSeedsFirst) {
  const auto s = make_scene({{"big", 500, 500, 100, 100}, {"s", 0, 0, 50, 20}, {"p", 5, 10, 10, 10}});
  const auto g = spatial::extract_relations(s);
  foa::FoAConfig cfg;
  EXPECT_EQ(foa::build_covers(g, s, cfg)[0].seed, "s");
  cfg.seed_policy = foa::SeedPolicy::LargestAny;
  EXPECT_EQ(foa::build_covers(g, s, cfg)[0].seed, "big");
}

TEST(Covers, IsolatedRectSingleton) {
  const auto s = make_scene({{"a", 0, 0, 10, 10}});
  const auto covers = foa::build_covers(spatial::extract_relations(s), s, {});
  ASSERT_EQ(covers.size(), 1u);
  EXPECT_EQ(covers[0].members, (std::vector<std::string>{"a"}));
}

TEST(Covers, Soundness) {
  for (std::size_t K : {2u, 5u, 12u}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto s = noisy(8, seed);
      const auto g = spatial::extract_relations(s);
      foa::FoAConfig cfg;
      cfg.K = K;
      const auto covers = foa::build_covers(g, s, cfg);
      std::set<std::string> seen, seeds;
      for (std::size_t i = 0; i < covers.size(); ++i) {
        const auto& c = covers[i];
        EXPECT_EQ(c.ordinal, i);
        EXPECT_LE(c.members.size(), K);
        ASSERT_FALSE(c.members.empty());
        EXPECT_EQ(c.members[0], c.seed);
        EXPECT_TRUE(seeds.insert(c.seed).second);
        for (std::size_t j = 2; j < c.members.size(); ++j) {
          const auto& p = *std::find_if(s.rects.begin(), s.rects.end(),
                                        [&](auto& r) { return r.id == c.members[j - 1]; });
          const auto& q = *std::find_if(s.rects.begin(), s.rects.end(),
                                        [&](auto& r) { return r.id == c.members[j]; });
          EXPECT_GE(p.w * p.h, q.w * q.h);
        }
        seen.insert(c.members.begin(), c.members.end());
      }
      EXPECT_EQ(seen.size(), s.rects.size());
    }
  }
}

TEST(Covers, ConfigCheck) {
  foa::FoAConfig cfg;
  cfg.K = 1;
  EXPECT_THROW(cfg.check(), Error);
}

TEST(Merge, SingleAndPermutation) {
  Labeling a, b, c;
  a.claims = {{"r", claim_with_e(Label::Shelf, 0.6)}, {"s", claim_with_e(Label::Other, 0.55)}};
  b.claims = {{"r", claim_with_e(Label::Product, 0.9)}, {"s", claim_with_e(Label::Shelf, 0.8)}};
  c.claims = {{"r", claim_with_e(Label::Other, 0.7)}, {"s", claim_with_e(Label::Product, 0.8)}};
  EXPECT_EQ(foa::merge_labelings(std::vector{a}), a);
  std::vector<Labeling> v{a, b, c};
  const auto flat = foa::merge_labelings(v);
  EXPECT_EQ(flat.claims.at("r").label, Label::Product);
  EXPECT_EQ(flat.claims.at("s").label, Label::Product);  // tie on e and c
  std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return nal::save_labeling(x) < nal::save_labeling(y); });
  do {
    EXPECT_EQ(foa::merge_labelings(v), flat);
  } while (std::next_permutation(v.begin(), v.end(), [](auto& x, auto& y) {
    return nal::save_labeling(x) < nal::save_labeling(y);
  }));
  const auto ab = foa::merge_labelings(std::vector{a, b});
  EXPECT_EQ(foa::merge_labelings(std::vector{ab, c}), flat);
}

TEST(Merge, HigherExpectationWins) {
  Labeling x, y;
  x.claims["r"] = claim_with_e(Label::Shelf, 0.7);
  y.claims["r"] = claim_with_e(Label::Product, 0.9);
  EXPECT_EQ(foa::merge_labelings(std::vector{x, y}).claims.at("r").label, Label::Product);
  EXPECT_EQ(foa::merge_labelings(std::vector{y, x}).claims.at("r").label, Label::Product);
}

TEST(Merge, UniverseMismatch) {
  Labeling x, y;
  x.claims["r"] = claim_with_e(Label::Shelf, 0.7);
  y.claims["q"] = claim_with_e(Label::Shelf, 0.7);
  try {
    foa::merge_labelings(std::vector{x, y});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UniverseMismatch);
  }
}

TEST(Run, CleanTwoShelfSceneBothModes) {
  scene::GenConfig cfg;
  cfg.n_shelves = 2;
  cfg.spurious_rate = 0;
  cfg.dropout_rate = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    cfg.rng_seed = seed;
    const auto [s, gt] = scene::generate_scene(cfg);
    for (bool use_foa : {false, true}) {
      const auto lab = foa::run(s, {}, nal::default_rules(), {}, use_foa).first;
      for (const auto& [id, l] : gt.labels) EXPECT_EQ(lab.claims.at(id).label, l);
    }
  }
}

TEST(Run, DegenerateSingleCover) {
  scene::GenConfig gc;
  gc.n_shelves = 3;
  gc.spurious_rate = 0;
  gc.dropout_rate = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    gc.rng_seed = seed;
    const auto s = scene::generate_scene(gc).first;
    foa::FoAConfig cfg;
    cfg.K = s.rects.size();
    cfg.seed_policy = foa::SeedPolicy::LargestAny;
    cfg.neighbourhood = foa::Neighbourhood::AnyRelation;
    const auto g = spatial::extract_relations(s);
    const auto covers = foa::build_covers(g, s, cfg);
    ASSERT_EQ(covers[0].members.size(), s.rects.size());
    const auto [with, stats] = foa::run_on_graph(g, s, nal::default_rules(), cfg, true);
    const auto without = foa::run_on_graph(g, s, nal::default_rules(), cfg, false).first;
    EXPECT_EQ(with, without);
    EXPECT_EQ(stats.mode, "foa");
    EXPECT_EQ(stats.n_covers, covers.size());
  }
}

TEST(Run, PremiseBoundIndependentOfSceneSize) {
  foa::FoAConfig cfg;
  cfg.K = 6;
  // Every ordered pair carries at most ten relations; each rect one floating
  // edge and seven attributes.
  const std::size_t bound = 10 * cfg.K * (cfg.K - 1) + 8 * cfg.K;
  std::size_t whole_max = 0;
  for (int shelves : {4, 16, 32}) {
    const auto s = noisy(shelves, 7);
    const auto g = spatial::extract_relations(s);
    const auto stats = foa::run_on_graph(g, s, nal::default_rules(), cfg, true).second;
    const auto covers = foa::build_covers(g, s, cfg);
    ASSERT_EQ(stats.per_cover.size(), covers.size());
    for (std::size_t i = 0; i < covers.size(); ++i) {
      EXPECT_LE(stats.per_cover[i].size, cfg.K);
      EXPECT_EQ(stats.per_cover[i].premises,
                foa::premise_count(foa::induced_subgraph(g, covers[i].members, "x")));
      EXPECT_LE(stats.per_cover[i].premises, bound);
    }
    whole_max = foa::run_on_graph(g, s, nal::default_rules(), cfg, false).second.per_cover.at(0).premises;
  }
  EXPECT_GT(whole_max, bound);
}

TEST(Run, ThreadsDoNotChangeResult) {
  const auto s = noisy(8, 3);
  foa::RunOptions one, four;
  four.threads = 4;
  const auto a = foa::run(s, {}, nal::default_rules(), {}, true, one);
  const auto b = foa::run(s, {}, nal::default_rules(), {}, true, four);
  EXPECT_EQ(a.first, b.first);
  EXPECT_EQ(a.second.per_cover, b.second.per_cover);
}

TEST(Run, InducedSubgraphRetagsEvidence) {
  const auto s = noisy(4, 1);
  const auto g = spatial::extract_relations(s);
  const auto covers = foa::build_covers(g, s, {});
  const auto sub = foa::induced_subgraph(g, covers[0].members, "cover:0");
  EXPECT_EQ(sub.node_count(), covers[0].members.size() + 1);
  for (const auto& e : sub.edges()) EXPECT_EQ(e.tags(), (std::set<std::string>{"cover:0"}));
}
