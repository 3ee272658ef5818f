#include "sssp/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace sssp {

namespace {

// > 0 when p is to the left of the directed line a -> b.
double orient(const Point& a, const Point& b, const Point& p) {
  return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
}

// 42-bit Morton code from 21-bit quantized coordinates.
std::uint64_t interleave21(std::uint64_t v) {
  v &= (1ULL << 21) - 1;
  v = (v | (v << 32)) & 0x1F00000000FFFFULL;
  v = (v | (v << 16)) & 0x1F0000FF0000FFULL;
  v = (v | (v << 8)) & 0x100F00F00F00F00FULL;
  v = (v | (v << 4)) & 0x10C30C30C30C30C3ULL;
  v = (v | (v << 2)) & 0x1249249249249249ULL;
  return v;
}

struct Tri {
  std::array<std::uint32_t, 3> v;    // counter-clockwise
  std::array<std::int32_t, 3> nbr;   // nbr[i] faces the edge opposite v[i]
  bool alive;
};

class Triangulator {
 public:
  explicit Triangulator(std::span<const Point> input) : n_(input.size()) {
    points_.assign(input.begin(), input.end());
    add_super_triangle();
    order_ = morton_order(input);
    tris_.reserve(2 * n_ + 16);
    stamp_of_.reserve(2 * n_ + 16);
  }

  std::vector<Triangle> run() {
    Tri root{{static_cast<std::uint32_t>(n_), static_cast<std::uint32_t>(n_ + 1),
              static_cast<std::uint32_t>(n_ + 2)},
             {-1, -1, -1},
             true};
    tris_.push_back(root);
    stamp_of_.push_back(0);
    last_tri_ = 0;

    for (std::uint32_t idx : order_) {
      insert_point(idx);
    }

    std::vector<Triangle> result;
    for (const Tri& t : tris_) {
      if (t.alive && t.v[0] < n_ && t.v[1] < n_ && t.v[2] < n_) {
        result.push_back(Triangle{t.v});
      }
    }
    return result;
  }

 private:
  void add_super_triangle() {
    double min_x = std::numeric_limits<double>::max();
    double min_y = std::numeric_limits<double>::max();
    double max_x = std::numeric_limits<double>::lowest();
    double max_y = std::numeric_limits<double>::lowest();
    for (std::size_t i = 0; i < n_; ++i) {
      min_x = std::min(min_x, points_[i].x);
      max_x = std::max(max_x, points_[i].x);
      min_y = std::min(min_y, points_[i].y);
      max_y = std::max(max_y, points_[i].y);
    }
    const double cx = (min_x + max_x) / 2;
    const double cy = (min_y + max_y) / 2;
    const double r = std::max({max_x - min_x, max_y - min_y, 1.0});
    points_.push_back(Point{cx - 24 * r, cy - 14 * r});
    points_.push_back(Point{cx + 24 * r, cy - 14 * r});
    points_.push_back(Point{cx, cy + 28 * r});
  }

  std::vector<std::uint32_t> morton_order(std::span<const Point> input) const {
    double min_x = std::numeric_limits<double>::max();
    double min_y = std::numeric_limits<double>::max();
    double max_x = std::numeric_limits<double>::lowest();
    double max_y = std::numeric_limits<double>::lowest();
    for (const Point& p : input) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    const double sx = (max_x > min_x) ? ((1 << 21) - 1) / (max_x - min_x) : 0.0;
    const double sy = (max_y > min_y) ? ((1 << 21) - 1) / (max_y - min_y) : 0.0;

    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(input.size());
    for (std::uint32_t i = 0; i < input.size(); ++i) {
      const auto qx = static_cast<std::uint64_t>((input[i].x - min_x) * sx);
      const auto qy = static_cast<std::uint64_t>((input[i].y - min_y) * sy);
      keyed[i] = {interleave21(qx) | (interleave21(qy) << 1), i};
    }
    std::sort(keyed.begin(), keyed.end());

    std::vector<std::uint32_t> order(input.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      order[i] = keyed[i].second;
    }
    return order;
  }

  // Strictly inside the circumcircle of tri t. Exact zeros defer to the
  // index rule so degenerate cocircular sets stay deterministic.
  bool in_circumcircle(const Tri& t, std::uint32_t p) const {
    const double det = incircle_det(points_[t.v[0]], points_[t.v[1]],
                                    points_[t.v[2]], points_[p]);
    if (det > 0) {
      return true;
    }
    if (det < 0) {
      return false;
    }
    return p > std::max({t.v[0], t.v[1], t.v[2]});
  }

  std::uint32_t locate(std::uint32_t p) {
    const Point& q = points_[p];
    std::uint32_t t = last_tri_;
    std::size_t steps = 0;
    const std::size_t cap = tris_.size() * 4 + 64;
    while (steps++ < cap) {
      const Tri& tri = tris_[t];
      bool moved = false;
      for (int j = 0; j < 3; ++j) {
        const Point& a = points_[tri.v[(j + 1) % 3]];
        const Point& b = points_[tri.v[(j + 2) % 3]];
        if (orient(a, b, q) < 0) {
          if (tri.nbr[j] < 0) {
            moved = false;  // walked out of the super-triangle: numeric trouble
            break;
          }
          t = static_cast<std::uint32_t>(tri.nbr[j]);
          moved = true;
          break;
        }
      }
      if (!moved) {
        if (contains(t, q)) {
          return t;
        }
        break;
      }
    }
    return locate_by_scan(q);
  }

  bool contains(std::uint32_t t, const Point& q) const {
    const Tri& tri = tris_[t];
    return orient(points_[tri.v[0]], points_[tri.v[1]], q) >= 0 &&
           orient(points_[tri.v[1]], points_[tri.v[2]], q) >= 0 &&
           orient(points_[tri.v[2]], points_[tri.v[0]], q) >= 0;
  }

  // Deterministic fallback: first alive triangle containing q, else the one
  // with the least-negative worst edge.
  std::uint32_t locate_by_scan(const Point& q) const {
    std::uint32_t best = 0;
    double best_score = std::numeric_limits<double>::lowest();
    for (std::uint32_t t = 0; t < tris_.size(); ++t) {
      if (!tris_[t].alive) {
        continue;
      }
      const Tri& tri = tris_[t];
      const double score =
          std::min({orient(points_[tri.v[0]], points_[tri.v[1]], q),
                    orient(points_[tri.v[1]], points_[tri.v[2]], q),
                    orient(points_[tri.v[2]], points_[tri.v[0]], q)});
      if (score >= 0) {
        return t;
      }
      if (score > best_score) {
        best_score = score;
        best = t;
      }
    }
    return best;
  }

  void insert_point(std::uint32_t p) {
    const std::uint32_t start = locate(p);
    ++stamp_;

    // Slots freed by earlier insertions become reusable; slots freed below
    // stay readable until this insertion finishes (boundary_ points at them).
    free_old_.insert(free_old_.end(), free_new_.begin(), free_new_.end());
    free_new_.clear();

    // Grow the cavity of triangles whose circumcircle contains p.
    cavity_.clear();
    boundary_.clear();
    walk_stack_.clear();
    walk_stack_.push_back(start);
    mark(start, kBad);
    while (!walk_stack_.empty()) {
      const std::uint32_t t = walk_stack_.back();
      walk_stack_.pop_back();
      cavity_.push_back(t);
      for (int j = 0; j < 3; ++j) {
        const std::int32_t nb = tris_[t].nbr[j];
        if (nb < 0) {
          boundary_.push_back({t, j});
          continue;
        }
        const auto nbu = static_cast<std::uint32_t>(nb);
        switch (mark_of(nbu)) {
          case kBad:
            break;
          case kGood:
            boundary_.push_back({t, j});
            break;
          default:
            if (in_circumcircle(tris_[nbu], p)) {
              mark(nbu, kBad);
              walk_stack_.push_back(nbu);
            } else {
              mark(nbu, kGood);
              boundary_.push_back({t, j});
            }
        }
      }
    }

    for (std::uint32_t t : cavity_) {
      tris_[t].alive = false;
      free_new_.push_back(t);
    }

    // One new triangle (p, a, b) per cavity-boundary edge.
    new_tris_.clear();
    for (const auto& [t, j] : boundary_) {
      const std::uint32_t a = tris_[t].v[(j + 1) % 3];
      const std::uint32_t b = tris_[t].v[(j + 2) % 3];
      std::int32_t outer = tris_[t].nbr[j];
      const std::uint32_t fresh = alloc_tri(Tri{{p, a, b}, {outer, -1, -1}, true});
      if (outer >= 0) {
        Tri& o = tris_[static_cast<std::uint32_t>(outer)];
        for (int k = 0; k < 3; ++k) {
          if (o.nbr[k] == static_cast<std::int32_t>(t)) {
            o.nbr[k] = static_cast<std::int32_t>(fresh);
            break;
          }
        }
      }
      new_tris_.push_back(fresh);
    }

    // Stitch the fan: edge (b, p) of one triangle meets edge (p, a) of the
    // neighbour whose a equals our b.
    for (std::uint32_t ti : new_tris_) {
      Tri& tri = tris_[ti];
      for (std::uint32_t tj : new_tris_) {
        if (ti == tj) {
          continue;
        }
        if (tris_[tj].v[1] == tri.v[2]) {  // their a == our b
          tri.nbr[1] = static_cast<std::int32_t>(tj);
        }
        if (tris_[tj].v[2] == tri.v[1]) {  // their b == our a
          tri.nbr[2] = static_cast<std::int32_t>(tj);
        }
      }
    }

    last_tri_ = new_tris_.front();
  }

  std::uint32_t alloc_tri(const Tri& t) {
    if (!free_old_.empty()) {
      const std::uint32_t slot = free_old_.back();
      free_old_.pop_back();
      tris_[slot] = t;
      stamp_of_[slot] = 0;
      return slot;
    }
    tris_.push_back(t);
    stamp_of_.push_back(0);
    return static_cast<std::uint32_t>(tris_.size() - 1);
  }

  static constexpr std::uint32_t kBad = 1;
  static constexpr std::uint32_t kGood = 2;

  void mark(std::uint32_t t, std::uint32_t value) {
    stamp_of_[t] = stamp_ * 4 + value;
  }
  std::uint32_t mark_of(std::uint32_t t) const {
    return (stamp_of_[t] / 4 == stamp_) ? stamp_of_[t] % 4 : 0;
  }

  std::size_t n_;
  std::vector<Point> points_;  // input points then the three super vertices
  std::vector<std::uint32_t> order_;
  std::vector<Tri> tris_;
  std::vector<std::uint32_t> stamp_of_;
  std::vector<std::uint32_t> free_old_;
  std::vector<std::uint32_t> free_new_;
  std::uint32_t stamp_ = 0;
  std::uint32_t last_tri_ = 0;

  std::vector<std::uint32_t> cavity_;
  std::vector<std::uint32_t> walk_stack_;
  std::vector<std::uint32_t> new_tris_;
  struct BoundaryEdge {
    std::uint32_t tri;
    int edge;
  };
  std::vector<BoundaryEdge> boundary_;
};

}  // namespace

double incircle_det(const Point& a, const Point& b, const Point& c, const Point& p) {
  const double adx = a.x - p.x, ady = a.y - p.y;
  const double bdx = b.x - p.x, bdy = b.y - p.y;
  const double cdx = c.x - p.x, cdy = c.y - p.y;
  const double ad = adx * adx + ady * ady;
  const double bd = bdx * bdx + bdy * bdy;
  const double cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
         ad * (bdx * cdy - bdy * cdx);
}

std::vector<Triangle> triangulate(std::span<const Point> points) {
  if (points.size() < 3) {
    throw std::invalid_argument("triangulate: need at least 3 points");
  }
  if (points.size() > std::numeric_limits<std::uint32_t>::max() - 3) {
    throw std::invalid_argument("triangulate: too many points");
  }
  Triangulator tr(points);
  return tr.run();
}

}  // namespace sssp
