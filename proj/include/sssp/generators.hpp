#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sssp/delaunay.hpp"
#include "sssp/graph.hpp"

namespace sssp {

// Random planar topology: n points placed uniformly at random in a square,
// joined by their Delaunay triangulation. Symmetric, connected, and
// m <= 6n - 12.
struct PlanarConfig {
  std::size_t n;
  double side = 10000.0;
  std::uint64_t seed = 1;
};

// G(n, p) digraph: every ordered pair (u, v), u != v, becomes an arc
// independently with probability p; arc weights uniform on {1, ..., w_max}.
struct RandomConfig {
  std::size_t n;
  double p = 0.1;
  Weight w_max = 10000;
  std::uint64_t seed = 1;
};

// The n distinct points generate_planar triangulates, in vertex order.
// Exposed so tests can audit the triangulation against the raw points.
std::vector<Point> sample_planar_points(const PlanarConfig& cfg);

// Both generators are pure functions of their config: same config, same
// graph, bit for bit, on any platform.
Graph generate_planar(const PlanarConfig& cfg);
Graph generate_random(const RandomConfig& cfg);

// One-line origin descriptions for `c` comment lines in saved graph files.
std::string generator_comment(const PlanarConfig& cfg);
std::string generator_comment(const RandomConfig& cfg);

}  // namespace sssp
