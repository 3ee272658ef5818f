#include "sssp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "sssp/rng.hpp"

namespace sssp {

namespace {

void validate(const PlanarConfig& cfg) {
  if (cfg.n < 3) {
    throw std::invalid_argument("generate_planar: need n >= 3 for a triangulation");
  }
  if (cfg.n > kNoVertex) {
    throw std::invalid_argument("generate_planar: n too large");
  }
  if (!(cfg.side > 0)) {
    throw std::invalid_argument("generate_planar: side must be positive");
  }
}

void validate(const RandomConfig& cfg) {
  if (cfg.n > kNoVertex) {
    throw std::invalid_argument("generate_random: n too large");
  }
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) {
    throw std::invalid_argument("generate_random: p must be in [0, 1]");
  }
  if (cfg.w_max < 1 || cfg.w_max > kMaxArcWeight) {
    throw std::invalid_argument("generate_random: w_max out of range");
  }
}

std::uint64_t point_bits(const Point& p) {
  std::uint64_t xb, yb;
  static_assert(sizeof(double) == sizeof(std::uint64_t));
  std::memcpy(&xb, &p.x, sizeof xb);
  std::memcpy(&yb, &p.y, sizeof yb);
  return xb ^ (yb * 0x9E3779B97F4A7C15ULL);
}

}  // namespace

std::vector<Point> sample_planar_points(const PlanarConfig& cfg) {
  validate(cfg);
  Xoshiro256 rng(cfg.seed);
  std::vector<Point> points;
  points.reserve(cfg.n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(cfg.n * 2);
  while (points.size() < cfg.n) {
    const Point p{rng.uniform_double() * cfg.side, rng.uniform_double() * cfg.side};
    // Exact duplicates are resampled (astronomically rare with doubles).
    if (seen.insert(point_bits(p)).second) {
      points.push_back(p);
    }
  }
  return points;
}

Graph generate_planar(const PlanarConfig& cfg) {
  const std::vector<Point> points = sample_planar_points(cfg);
  const std::vector<Triangle> tris = triangulate(points);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(tris.size() * 3);
  for (const Triangle& t : tris) {
    for (int j = 0; j < 3; ++j) {
      const std::uint32_t a = t.v[j];
      const std::uint32_t b = t.v[(j + 1) % 3];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  GraphBuilder builder(cfg.n);
  for (const auto& [u, v] : edges) {
    const double dx = points[u].x - points[v].x;
    const double dy = points[u].y - points[v].y;
    const auto w = std::max<std::int64_t>(1, std::llround(std::sqrt(dx * dx + dy * dy)));
    builder.add_edge(u, v, w);
  }
  return builder.build();
}

Graph generate_random(const RandomConfig& cfg) {
  validate(cfg);
  Xoshiro256 rng(cfg.seed);
  GraphBuilder builder(cfg.n);
  // Row-major pair order (u outer, v inner) fixes the RNG consumption
  // sequence, so a seed identifies one graph forever.
  for (Vertex u = 0; u < cfg.n; ++u) {
    for (Vertex v = 0; v < cfg.n; ++v) {
      if (u == v) {
        continue;
      }
      if (rng.uniform_double() < cfg.p) {
        const auto w = static_cast<std::int64_t>(1 + rng.below(cfg.w_max));
        builder.add_arc(u, v, w);
      }
    }
  }
  return builder.build();
}

std::string generator_comment(const PlanarConfig& cfg) {
  return "generator: topology=planar n=" + std::to_string(cfg.n) +
         " side=" + std::to_string(cfg.side) + " seed=" + std::to_string(cfg.seed);
}

std::string generator_comment(const RandomConfig& cfg) {
  return "generator: topology=random n=" + std::to_string(cfg.n) +
         " p=" + std::to_string(cfg.p) + " wmax=" + std::to_string(cfg.w_max) +
         " seed=" + std::to_string(cfg.seed);
}

}  // namespace sssp
