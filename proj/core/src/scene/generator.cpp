#include "strata/scene/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "strata/error.hpp"

namespace strata::scene {

void check_config(const GenConfig& c) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::ConfigInvalid, what); };
  if (c.n_shelves < 1 || c.n_shelves > 1000) bad("n_shelves must be in [1, 1000]");
  if (c.products_min < 0 || c.products_max < c.products_min || c.products_max > 200) {
    bad("products_per_shelf must satisfy 0 <= min <= max <= 200");
  }
  if (!(c.stack_prob >= 0.0 && c.stack_prob <= 1.0)) bad("stack_prob must be in [0, 1]");
  if (!(c.jitter_sigma >= 0.0)) bad("jitter_sigma must be >= 0");
  if (!(c.spurious_rate >= 0.0)) bad("spurious_rate must be >= 0");
  if (!(c.dropout_rate >= 0.0 && c.dropout_rate < 1.0)) bad("dropout_rate must be in [0, 1)");
}

namespace {

struct Pending {
  Rect rect;
  Label label;
};

// Edges on a 1/64 grid: exact in binary and in six decimals, so rects that
// touch by construction still touch after sums like y + h.
constexpr double kGrid = 64.0;

double snap(double v) { return std::round(v * kGrid) / kGrid; }

void snap_edges(Rect& r) {
  const double left = snap(r.x), top = snap(r.y);
  const double right = std::max(snap(r.right()), left + 1.0 / kGrid);
  const double bottom = std::max(snap(r.bottom()), top + 1.0 / kGrid);
  r = {r.id, left, top, right - left, bottom - top};
}

}  // namespace

std::pair<Scene, GroundTruth> generate_scene(const GenConfig& cfg) {
  check_config(cfg);
  using L = LayoutV1;
  std::mt19937_64 rng(cfg.rng_seed);
  auto uniform = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  const double W = L::kSceneWidth;
  const double H = cfg.n_shelves * L::kShelfPitch + L::kShelfGap;
  std::vector<Pending> items;

  for (int s = 0; s < cfg.n_shelves; ++s) {
    const double top = L::kShelfGap + s * L::kShelfPitch;
    const double bottom = top + L::kShelfHeight;
    items.push_back({{"", 0.0, top, W, L::kShelfHeight}, Label::Shelf});

    const int n = std::uniform_int_distribution<int>(cfg.products_min, cfg.products_max)(rng);
    if (n == 0) continue;
    const double slot = W / n;
    for (int i = 0; i < n; ++i) {
      const double w = slot * uniform(0.55, 0.85);
      const double x = i * slot + (slot - w) * uniform(0.2, 0.8);
      const bool stacked = std::bernoulli_distribution(cfg.stack_prob)(rng);
      if (!stacked) {
        const double h = L::kShelfHeight * uniform(0.45, 0.85);
        items.push_back({{"", x, bottom - h, w, h}, Label::Product});
        continue;
      }
      const double base_h = L::kShelfHeight * uniform(0.35, 0.5);
      const double top_h = L::kShelfHeight * uniform(0.25, 0.4);
      const double top_w = w * uniform(0.7, 1.0);
      const double top_x = x + (w - top_w) * uniform(0.0, 1.0);
      items.push_back({{"", x, bottom - base_h, w, base_h}, Label::Product});
      items.push_back({{"", top_x, bottom - base_h - top_h, top_w, top_h}, Label::Product});
    }
  }

  if (cfg.jitter_sigma > 0.0) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& it : items) {
      Rect& r = it.rect;
      const double sigma = cfg.jitter_sigma * std::min(r.w, r.h);
      const double dx = sigma * gauss(rng), dy = sigma * gauss(rng);
      const double dw = sigma * gauss(rng), dh = sigma * gauss(rng);
      r.x += dx;
      r.y += dy;
      r.w = std::max(r.w + dw, 0.05 * r.w);
      r.h = std::max(r.h + dh, 0.05 * r.h);
    }
  }

  // floor(rate) per shelf, one more with probability frac(rate)
  const double whole = std::floor(cfg.spurious_rate);
  std::bernoulli_distribution extra(cfg.spurious_rate - whole);
  int n_spurious = 0;
  for (int s = 0; s < cfg.n_shelves; ++s) n_spurious += static_cast<int>(whole) + (extra(rng) ? 1 : 0);
  for (int i = 0; i < n_spurious; ++i) {
    const double w = W * uniform(0.02, 0.12);
    const double h = L::kShelfPitch * uniform(0.2, 1.2);
    const double x = uniform(0.0, W - w);
    const double y = uniform(0.0, H - h);
    items.push_back({{"", x, y, w, h}, Label::Other});
  }

  if (cfg.dropout_rate > 0.0) {
    std::bernoulli_distribution drop(cfg.dropout_rate);
    std::vector<Pending> kept;
    for (auto& it : items) {
      if (it.label == Label::Product && drop(rng)) continue;
      kept.push_back(std::move(it));
    }
    items = std::move(kept);
  }

  std::shuffle(items.begin(), items.end(), rng);

  Scene scene;
  char buf[48];
  std::snprintf(buf, sizeof buf, "synthetic-v1-%016llx",
                static_cast<unsigned long long>(cfg.rng_seed));
  scene.scene_id = buf;
  scene.width = W;
  scene.height = H;
  GroundTruth gt;
  const int digits = items.size() > 999 ? 4 : 3;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::snprintf(buf, sizeof buf, "r%0*zu", digits, i);
    items[i].rect.id = buf;
    gt.labels.emplace(buf, items[i].label);
    scene.rects.push_back(std::move(items[i].rect));
  }
  for (auto& r : scene.rects) snap_edges(r);
  check_invariants(scene);
  return {std::move(scene), std::move(gt)};
}

}  // namespace strata::scene
