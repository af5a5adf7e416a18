#include <gtest/gtest.h>

#include <map>

#include "strata/error.hpp"
#include "strata/eval/config.hpp"
#include "strata/scene/document.hpp"
#include "strata/scene/generator.hpp"
#include "strata/spatial/extract.hpp"

using namespace strata;
using scene::Label;
using scene::Rect;

namespace {

ErrorCode load_error(const std::string& text) {
  try {
    scene::load_scene(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "scene loaded";
  return ErrorCode::MalformedDocument;
}

std::string doc(const std::string& rects) {
  return R"({"scene_id":"s","width":100,"height":100,"rects":[)" + rects + "]}";
}

}  // namespace

TEST(Derived, Examples) {
  auto d = scene::derived({"a", 0, 0, 3, 4});
  EXPECT_EQ(d.center, (scene::Point{1.5, 2}));
  EXPECT_EQ(d.area, 12);
  EXPECT_EQ(d.circumference, 14);
  d = scene::derived({"b", 0, 0, 1, 1});
  EXPECT_EQ(d.center, (scene::Point{0.5, 0.5}));
  EXPECT_EQ(d.circumference, 4);
  d = scene::derived({"c", 10, 20, 2, 8});
  EXPECT_EQ(d.center, (scene::Point{11, 24}));
  EXPECT_EQ(d.area, 16);
  EXPECT_EQ(d.circumference, 20);
}

TEST(LoadScene, TwoRects) {
  const auto s = scene::load_scene(
      doc(R"({"id":"r2","x":1,"y":1,"w":2,"h":2},{"id":"r1","x":5,"y":5,"w":1,"h":3})"));
  ASSERT_EQ(s.rects.size(), 2u);
  EXPECT_EQ(s.rects[0].id, "r1");
}

TEST(LoadScene, Errors) {
  EXPECT_EQ(load_error(doc(R"({"id":"r1","x":1,"y":1,"w":0,"h":2})")), ErrorCode::NonPositiveExtent);
  EXPECT_EQ(load_error(doc(R"({"id":"r1","x":1,"y":1,"w":2,"h":2},{"id":"r1","x":3,"y":3,"w":2,"h":2})")),
            ErrorCode::DuplicateRectId);
  EXPECT_EQ(load_error(doc(R"({"id":"r1","x":200,"y":1,"w":2,"h":2})")), ErrorCode::OutOfBounds);
  EXPECT_EQ(load_error(R"({"scene_id":"s","width":100)"), ErrorCode::MalformedDocument);
  EXPECT_EQ(load_error(doc(R"({"id":"r1","x":"1","y":1,"w":2,"h":2})")), ErrorCode::MalformedDocument);
}

TEST(SceneDocument, RoundTrip) {
  scene::GenConfig cfg;
  cfg.jitter_sigma = 0.01;
  cfg.rng_seed = 9;
  const auto [s, gt] = scene::generate_scene(cfg);
  const auto text = scene::save_scene(s);
  EXPECT_EQ(scene::load_scene(text), s);
  EXPECT_EQ(scene::save_scene(scene::load_scene(text)), text);
  const auto gtext = scene::save_ground_truth(gt);
  EXPECT_EQ(scene::load_ground_truth(gtext), gt);
}

TEST(Generator, CountsWithoutNoise) {
  scene::GenConfig cfg;
  cfg.n_shelves = 2;
  cfg.products_min = cfg.products_max = 3;
  cfg.stack_prob = 0;
  cfg.jitter_sigma = 0;
  cfg.spurious_rate = 0;
  cfg.dropout_rate = 0;
  const auto [s, gt] = scene::generate_scene(cfg);
  std::map<Label, int> n;
  for (const auto& [id, l] : gt.labels) ++n[l];
  EXPECT_EQ(n[Label::Shelf], 2);
  EXPECT_EQ(n[Label::Product], 6);
  EXPECT_EQ(s.rects.size(), 8u);
}

TEST(Generator, Deterministic) {
  scene::GenConfig cfg;
  cfg.jitter_sigma = 0.01;
  cfg.rng_seed = 77;
  EXPECT_EQ(scene::save_scene(scene::generate_scene(cfg).first),
            scene::save_scene(scene::generate_scene(cfg).first));
  auto other = cfg;
  other.rng_seed = 78;
  EXPECT_NE(scene::save_scene(scene::generate_scene(cfg).first),
            scene::save_scene(scene::generate_scene(other).first));
}

TEST(Generator, DefaultScaleCounts) {
  scene::GenConfig cfg;
  double mean = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cfg.rng_seed = seed;
    const auto n = scene::generate_scene(cfg).first.rects.size();
    EXPECT_GE(n, 130u);
    EXPECT_LE(n, 180u);
    mean += n / 100.0;
  }
  EXPECT_NEAR(mean, 152, 10);
}

TEST(Generator, NoiseFreeProductsSupportedAndShelvesFilled) {
  scene::GenConfig cfg;
  cfg.jitter_sigma = 0;
  cfg.spurious_rate = 0;
  cfg.dropout_rate = 0;
  cfg.stack_prob = 0.3;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    cfg.rng_seed = seed;
    const auto [s, gt] = scene::generate_scene(cfg);
    const spatial::Tolerances tol;
    for (std::size_t i = 0; i < s.rects.size(); ++i) {
      const auto& r = s.rects[i];
      if (gt.labels.at(r.id) == Label::Product) {
        // Resting on the shelf bottom or on another product.
        bool supported = false;
        for (const auto& o : s.rects) {
          if (o.id == r.id) continue;
          if (gt.labels.at(o.id) == Label::Shelf && o.bottom() == r.bottom()) supported = true;
          if (gt.labels.at(o.id) == Label::Product && o.top() == r.bottom()) supported = true;
        }
        EXPECT_TRUE(supported) << r.id;
      } else {
        int inside = 0;
        for (const auto& o : s.rects) {
          if (o.id != r.id && spatial::contains(r, o, tol)) ++inside;
        }
        EXPECT_GE(inside, 1) << r.id;
      }
    }
  }
}

TEST(Generator, LabelsPartitionIds) {
  scene::GenConfig cfg;
  cfg.rng_seed = 5;
  const auto [s, gt] = scene::generate_scene(cfg);
  ASSERT_EQ(gt.labels.size(), s.rects.size());
  for (const auto& r : s.rects) EXPECT_TRUE(gt.labels.count(r.id));
}

TEST(Generator, ConfigInvalid) {
  scene::GenConfig cfg;
  cfg.dropout_rate = 1.0;
  EXPECT_THROW(scene::generate_scene(cfg), Error);
  cfg = {};
  cfg.products_min = 5;
  cfg.products_max = 2;
  EXPECT_THROW(scene::generate_scene(cfg), Error);
  EXPECT_THROW(eval::load_gen_config(R"({"jitter_sigma": -1})"), Error);
}
