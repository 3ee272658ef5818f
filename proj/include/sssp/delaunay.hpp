#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace sssp {

struct Point {
  double x;
  double y;

  friend bool operator==(const Point&, const Point&) = default;
};

// Triangle of the final triangulation; entries index the input point span.
struct Triangle {
  std::array<std::uint32_t, 3> v;
};

// Delaunay triangulation by incremental Bowyer-Watson insertion inside an
// enclosing super-triangle (removed at the end). Points are inserted in
// Morton order and located by walking from the last created triangle, which
// keeps point location near O(1) on random inputs. Points must be distinct;
// exact cocircular ties fall back to a point-index rule so results are
// deterministic.
std::vector<Triangle> triangulate(std::span<const Point> points);

// Positive when p lies strictly inside the circumcircle of the
// counter-clockwise triangle (a, b, c); exposed for verification.
double incircle_det(const Point& a, const Point& b, const Point& c, const Point& p);

}  // namespace sssp
