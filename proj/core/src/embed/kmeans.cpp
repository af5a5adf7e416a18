#include "strata/embed/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "strata/error.hpp"

namespace strata::embed {

namespace {

double dist2(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
  return s;
}

}  // namespace

std::size_t assign_cluster(const std::vector<Point>& centroids, const Point& v) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < centroids.size(); ++i) {
    const double d = dist2(centroids[i], v);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::vector<Point> kmeans_centroids(const std::vector<Point>& points, int k,
                                    std::uint64_t rng_seed) {
  const std::set<Point> distinct(points.begin(), points.end());
  if (k < 1 || static_cast<std::size_t>(k) > distinct.size()) {
    throw Error(ErrorCode::TooFewPoints, "k = " + std::to_string(k) + " but only " +
                                             std::to_string(distinct.size()) + " distinct points");
  }
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Point> centroids;
  centroids.push_back(points[std::uniform_int_distribution<std::size_t>(0, points.size() - 1)(rng)]);
  std::vector<double> d2(points.size());
  while (centroids.size() < static_cast<std::size_t>(k)) {
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      d2[i] = dist2(points[i], centroids[assign_cluster(centroids, points[i])]);
      total += d2[i];
    }
    double u = unit(rng) * total;
    std::size_t pick = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (d2[i] > 0.0 && u < d2[i]) {
        pick = i;
        break;
      }
      u -= d2[i];
    }
    if (pick == points.size()) {
      for (std::size_t i = points.size(); i-- > 0;) {
        if (d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
    }
    centroids.push_back(points[pick]);
  }

  std::vector<std::size_t> assign(points.size(), centroids.size());
  for (int iter = 0; iter < 100; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::size_t c = assign_cluster(centroids, points[i]);
      if (c != assign[i]) {
        assign[i] = c;
        changed = true;
      }
    }
    if (!changed) break;
    std::vector<Point> sums(centroids.size(), Point(points[0].size(), 0.0));
    std::vector<std::size_t> n(centroids.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t d = 0; d < points[i].size(); ++d) sums[assign[i]][d] += points[i][d];
      ++n[assign[i]];
    }
    for (std::size_t c = 0; c < centroids.size(); ++c) {
      if (n[c] == 0) continue;
      for (auto& x : sums[c]) x /= static_cast<double>(n[c]);
      centroids[c] = sums[c];
    }
  }
  return centroids;
}

std::vector<Point> kmeans_centroids(const EmbeddingSpace& space, int k, std::uint64_t rng_seed) {
  std::vector<Point> points;
  for (const auto& [_, v] : space.vectors) points.push_back(v);
  return kmeans_centroids(points, k, rng_seed);
}

}  // namespace strata::embed
