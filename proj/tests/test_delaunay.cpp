#include "sssp/delaunay.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "sssp/rng.hpp"
#include "test_support.hpp"

using namespace sssp;

namespace {

std::vector<Point> random_points(std::uint64_t seed, std::size_t n,
                                 double side) {
  Xoshiro256 rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back({rng.uniform_double() * side, rng.uniform_double() * side});
  }
  return pts;
}

std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set(
    const std::vector<Triangle>& tris) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const Triangle& t : tris) {
    for (int i = 0; i < 3; ++i) {
      const auto a = t.v[i];
      const auto b = t.v[(i + 1) % 3];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("fewer than three points is an error") {
  const std::vector<Point> two{{0, 0}, {1, 1}};
  CHECK_THROWS_AS((void)triangulate(two), std::invalid_argument);
}

TEST_CASE("three points give exactly their triangle") {
  const std::vector<Point> pts{{0, 0}, {4, 0}, {0, 3}};
  const auto tris = triangulate(pts);
  REQUIRE(tris.size() == 1);
  std::set<std::uint32_t> used(tris[0].v.begin(), tris[0].v.end());
  CHECK(used == std::set<std::uint32_t>{0, 1, 2});
}

TEST_CASE("unit square splits into two triangles along one diagonal") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto tris = triangulate(pts);
  REQUIRE(tris.size() == 2);  // the four corners are cocircular; tie rule picks
  const auto edges = edge_set(tris);
  CHECK(edges.size() == 5);  // 4 hull edges + 1 diagonal
  const bool diag02 = edges.count({0, 2}) == 1;
  const bool diag13 = edges.count({1, 3}) == 1;
  CHECK(diag02 != diag13);
  // cocircular tie must resolve the same way on every run
  const auto again = triangulate(pts);
  REQUIRE(again.size() == 2);
  CHECK(edge_set(again) == edges);
  const auto oracle = testsupport::empty_circumcircles(pts, tris);
  CHECK_MESSAGE(oracle.pass, oracle.message);
}

TEST_CASE("5x5 integer grid: full stress of cocircular ties") {
  std::vector<Point> pts;
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) {
      pts.push_back({static_cast<double>(x), static_cast<double>(y)});
    }
  }
  const auto tris = triangulate(pts);
  // Triangulating n points whose convex hull has h vertices always yields
  // 2n - 2 - h triangles: n = 25, h = 16 -> 32.
  CHECK(tris.size() == 32);
  const auto oracle = testsupport::empty_circumcircles(pts, tris);
  CHECK_MESSAGE(oracle.pass, oracle.message);
}

TEST_CASE("random point sets: structure, Delaunay property, determinism") {
  for (const std::uint64_t seed : {11ULL, 22ULL, 33ULL}) {
    const auto pts = random_points(seed, 180, 1000.0);
    const auto tris = triangulate(pts);

    // every point participates
    std::set<std::uint32_t> used;
    for (const Triangle& t : tris) {
      used.insert(t.v.begin(), t.v.end());
    }
    CHECK(used.size() == pts.size());

    // planarity bound on distinct edges
    CHECK(edge_set(tris).size() <= 3 * pts.size() - 6);

    const auto oracle = testsupport::empty_circumcircles(pts, tris);
    REQUIRE_MESSAGE(oracle.pass, "seed " << seed << ": " << oracle.message);

    // bitwise determinism
    const auto again = triangulate(pts);
    REQUIRE(again.size() == tris.size());
    for (std::size_t i = 0; i < tris.size(); ++i) {
      CHECK(again[i].v == tris[i].v);
    }
  }
}

TEST_CASE("incircle determinant signs on a known circle") {
  // CCW triangle (0,0), (2,0), (0,2): circumcircle centre (1,1), radius sqrt2
  const Point a{0, 0}, b{2, 0}, c{0, 2};
  CHECK(incircle_det(a, b, c, {1, 1}) > 0);    // centre: strictly inside
  CHECK(incircle_det(a, b, c, {5, 5}) < 0);    // far outside
  CHECK(incircle_det(a, b, c, {2, 2}) == 0);   // exactly on the circle
  CHECK(incircle_det(a, b, c, {1.0, 1 - 1.4142135}) > 0);  // just inside
}
