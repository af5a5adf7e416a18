#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "strata/embed/skipgram.hpp"

namespace strata::embed {

using Point = std::vector<double>;

/// k-means++ seeding followed by Lloyd iterations (at most 100). Points are
/// taken in node-name order. Throws TooFewPoints when k exceeds the number of
/// distinct vectors.
std::vector<Point> kmeans_centroids(const EmbeddingSpace& space, int k, std::uint64_t rng_seed);
std::vector<Point> kmeans_centroids(const std::vector<Point>& points, int k, std::uint64_t rng_seed);

/// Nearest centroid by Euclidean distance; ties go to the lowest index.
std::size_t assign_cluster(const std::vector<Point>& centroids, const Point& v);

}  // namespace strata::embed
