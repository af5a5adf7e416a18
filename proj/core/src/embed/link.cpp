#include "strata/embed/link.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "strata/error.hpp"

namespace strata::embed {

double diameter(const EmbeddingSpace& space) {
  std::vector<const std::vector<double>*> pts;
  for (const auto& [_, v] : space.vectors) pts.push_back(&v);
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double s = 0.0;
      for (std::size_t d = 0; d < pts[i]->size(); ++d) {
        const double diff = (*pts[i])[d] - (*pts[j])[d];
        s += diff * diff;
      }
      best = std::max(best, std::sqrt(s));
    }
  }
  return best;
}

Projection project(const std::array<double, 2>& a, const std::array<double, 2>& b,
                   const std::array<double, 2>& p) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / (dx * dx + dy * dy);
  const double fx = a[0] + t * dx, fy = a[1] + t * dy;
  return {t, std::hypot(p[0] - fx, p[1] - fy)};
}

int quarter_of(double t) {
  if (t <= 0.25) return 1;
  if (t <= 0.5) return 2;
  if (t <= 0.75) return 3;
  return 4;
}

LinkReport predict_links(const EmbeddingSpace& space, const std::string& n1, const std::string& n2,
                         double eps, double gamma, double max_eps) {
  if (space.dim != 2) throw Error(ErrorCode::NotTwoDimensional, "link prediction needs dim = 2");
  if (!(eps > 0.0)) throw Error(ErrorCode::ConfigInvalid, "eps must be positive");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw Error(ErrorCode::ConfigInvalid, "gamma must be in (0, 1]");
  const auto point = [&](const std::string& id) {
    auto it = space.vectors.find(id);
    if (it == space.vectors.end()) throw Error(ErrorCode::UnknownNode, "no vector for '" + id + "'");
    return std::array<double, 2>{it->second[0], it->second[1]};
  };
  const auto a = point(n1);
  const auto b = point(n2);
  if (n1 == n2 || a == b) {
    throw Error(ErrorCode::IdenticalEndpoints, "endpoints '" + n1 + "' and '" + n2 + "' coincide");
  }

  LinkReport r;
  r.n1 = n1;
  r.n2 = n2;
  if (a[0] == b[0]) {
    r.line = {true, 0.0, 0.0, a[0]};
  } else {
    const double slope = (b[1] - a[1]) / (b[0] - a[0]);
    r.line = {false, slope, a[1] - slope * a[0], 0.0};
  }
  r.eps_initial = eps;
  r.max_eps = max_eps < 0.0 ? diameter(space) : max_eps;

  struct Candidate {
    const std::string* id;
    double distance;
    int quarter;
  };
  std::vector<Candidate> on_segment;
  for (const auto& [id, v] : space.vectors) {
    if (id == n1 || id == n2) continue;
    const auto pr = project(a, b, {v[0], v[1]});
    if (pr.t < 0.0 || pr.t > 1.0) continue;
    on_segment.push_back({&id, pr.distance, quarter_of(pr.t)});
  }

  const auto fill = [&] {
    r.quadrant_counts = {};
    for (const auto& c : on_segment) {
      if (c.distance <= eps) ++r.quadrant_counts[c.quarter - 1];
    }
    return std::all_of(r.quadrant_counts.begin(), r.quadrant_counts.end(),
                       [](int n) { return n > 0; });
  };
  bool full = fill();
  while (!full && eps < r.max_eps) {
    eps += gamma;
    full = fill();
  }
  r.eps_final = eps;
  r.guard_tripped = !full;
  for (const auto& c : on_segment) {
    if (c.distance <= eps) r.members.emplace(*c.id, c.quarter);
  }
  int sum = 0, weighted = 0;
  for (int k = 0; k < 4; ++k) {
    sum += r.quadrant_counts[k];
    weighted += (k + 1) * r.quadrant_counts[k];
  }
  if (sum > 0) r.skew_index = static_cast<double>(weighted) / sum;
  return r;
}

}  // namespace strata::embed
