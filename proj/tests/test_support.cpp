#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "sssp/fib_heap.hpp"
#include "sssp/rng.hpp"

namespace sssp::testsupport {

namespace {

std::string op_label(std::size_t index, const HeapOp& op) {
  switch (op.kind) {
    case OpKind::insert:
      return "op " + std::to_string(index) + " insert(v=" +
             std::to_string(op.vertex) + ", key=" + std::to_string(op.key) + ")";
    case OpKind::decrease:
      return "op " + std::to_string(index) + " decrease(v=" +
             std::to_string(op.vertex) + ", key=" + std::to_string(op.key) + ")";
    case OpKind::extract:
      return "op " + std::to_string(index) + " extract";
  }
  return "op " + std::to_string(index);
}

}  // namespace

OpTrace make_trace(std::uint64_t seed, std::size_t max_len, Vertex universe) {
  Xoshiro256 rng(seed);
  OpTrace trace;
  const std::size_t len = rng.below(max_len + 1);
  trace.reserve(len);

  std::vector<char> live(universe, 0);
  std::vector<Weight> key(universe, 0);
  std::size_t live_count = 0;

  for (std::size_t step = 0; step < len; ++step) {
    // Weighted mix: 30% insert, 50% decrease, 20% extract, coerced to
    // whatever is legal when the live set is empty or full.
    std::uint64_t roll = rng.below(100);
    OpKind kind = roll < 30   ? OpKind::insert
                  : roll < 80 ? OpKind::decrease
                              : OpKind::extract;
    if (live_count == 0) {
      kind = OpKind::insert;
    } else if (live_count == universe && kind == OpKind::insert) {
      kind = OpKind::decrease;
    }

    switch (kind) {
      case OpKind::insert: {
        std::uint64_t skip = rng.below(universe - live_count);
        Vertex v = 0;
        while (live[v] || skip > 0) {
          if (!live[v]) {
            --skip;
          }
          ++v;
        }
        // Full-width keys: ties have probability ~2^-57 per trace, so the
        // generator's view of extraction order stays unambiguous.
        const Weight k = rng.next();
        trace.push_back({OpKind::insert, v, k});
        live[v] = 1;
        key[v] = k;
        ++live_count;
        break;
      }
      case OpKind::decrease: {
        std::uint64_t skip = rng.below(live_count);
        Vertex v = 0;
        while (!live[v] || skip > 0) {
          if (live[v]) {
            --skip;
          }
          ++v;
        }
        Weight k;
        if (rng.below(10) == 0 && key[v] < kInfinity - (1 << 20)) {
          k = key[v] + 1 + rng.below(1 << 20);  // no-op increase attempt
        } else {
          k = rng.below(key[v] + 1);
          if (k < key[v]) {
            key[v] = k;
          }
        }
        trace.push_back({OpKind::decrease, v, k});
        break;
      }
      case OpKind::extract: {
        trace.push_back({OpKind::extract});
        Vertex best = kNoVertex;
        for (Vertex v = 0; v < universe; ++v) {
          if (live[v] && (best == kNoVertex || key[v] < key[best])) {
            best = v;
          }
        }
        live[best] = 0;
        --live_count;
        break;
      }
    }
  }
  return trace;
}

CheckOutcome heap_oracle_check(const OpTrace& trace, Vertex universe,
                               bool check_every_op) {
  FibHeap heap(universe);
  std::multiset<std::pair<Weight, Vertex>> oracle;
  std::vector<Weight> key(universe, 0);
  std::vector<char> live(universe, 0);

  const auto fail = [](std::string msg) { return CheckOutcome{false, std::move(msg)}; };

  const auto do_extract = [&](std::size_t index) -> CheckOutcome {
    if (oracle.empty()) {
      return fail("trace bug: extract on empty heap at op " +
                  std::to_string(index));
    }
    const auto [v, k] = heap.extract_min();
    if (k != oracle.begin()->first) {
      return fail("extracted key " + std::to_string(k) +
                  " but reference minimum is " +
                  std::to_string(oracle.begin()->first) + " at op " +
                  std::to_string(index));
    }
    const auto it = oracle.find({k, v});
    if (it == oracle.end()) {
      return fail("extracted vertex " + std::to_string(v) +
                  " holds no live key " + std::to_string(k) + " at op " +
                  std::to_string(index));
    }
    oracle.erase(it);
    live[v] = 0;
    if (heap.contains(v)) {
      return fail("vertex " + std::to_string(v) +
                  " still reported live after extraction at op " +
                  std::to_string(index));
    }
    return {};
  };

  const auto audit = [&](std::size_t index) -> CheckOutcome {
    if (heap.size() != oracle.size()) {
      return fail("size " + std::to_string(heap.size()) + " vs reference " +
                  std::to_string(oracle.size()) + " after op " +
                  std::to_string(index));
    }
    try {
      heap.check_invariants();
    } catch (const std::logic_error& e) {
      return fail(std::string(e.what()) + " after op " + std::to_string(index));
    }
    return {};
  };

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const HeapOp& op = trace[i];
    switch (op.kind) {
      case OpKind::insert:
        if (live[op.vertex]) {
          return fail("trace bug: duplicate insert, " + op_label(i, op));
        }
        heap.insert(op.vertex, op.key);
        oracle.emplace(op.key, op.vertex);
        live[op.vertex] = 1;
        key[op.vertex] = op.key;
        if (!heap.contains(op.vertex)) {
          return fail("vertex not reported live, " + op_label(i, op));
        }
        break;
      case OpKind::decrease:
        if (!live[op.vertex]) {
          return fail("trace bug: decrease on dead vertex, " + op_label(i, op));
        }
        heap.decrease_key(op.vertex, op.key);
        if (op.key < key[op.vertex]) {
          oracle.erase(oracle.find({key[op.vertex], op.vertex}));
          oracle.emplace(op.key, op.vertex);
          key[op.vertex] = op.key;
        }
        break;
      case OpKind::extract:
        if (CheckOutcome out = do_extract(i); !out.pass) {
          return out;
        }
        break;
    }
    if (check_every_op) {
      if (CheckOutcome out = audit(i); !out.pass) {
        return out;
      }
    }
  }

  // Drain what the trace left behind; the full extraction order must match.
  std::size_t index = trace.size();
  while (!oracle.empty()) {
    if (CheckOutcome out = do_extract(index); !out.pass) {
      return out;
    }
    if (check_every_op) {
      if (CheckOutcome out = audit(index); !out.pass) {
        return out;
      }
    }
    ++index;
  }
  if (!heap.empty()) {
    return fail("heap reports size " + std::to_string(heap.size()) +
                " after the reference drained");
  }
  return {};
}

Weight path_weight(const Graph& g, const Path& path) {
  if (path.size() < 2) {
    return 0;
  }
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Weight best = kInfinity;
    for (const Neighbour& nb : g.neighbours(path[i])) {
      if (nb.vertex == path[i + 1]) {
        best = std::min(best, nb.weight);
      }
    }
    if (best == kInfinity) {
      return kInfinity;
    }
    total = checked_add(total, best);
  }
  return total;
}

CheckOutcome solver_agreement_check(const Graph& g, Vertex s) {
  const auto fail = [](std::string msg) { return CheckOutcome{false, std::move(msg)}; };
  const ShortestPathResult oracle = bellman_ford(g, s);

  for (const Variant variant : kAllVariants) {
    const std::string tag(variant_name(variant));
    const ShortestPathResult run = solve(g, s, variant);
    if (run.labels != oracle.labels) {
      return fail(tag + ": labels disagree with Bellman-Ford");
    }
    if (!run.complete) {
      return fail(tag + ": full run reported incomplete");
    }
    for (Vertex u = 0; u < g.n(); ++u) {
      const bool reachable = run.labels[u] != kInfinity;
      if (run.settled[u] != reachable) {
        return fail(tag + ": settled[" + std::to_string(u) +
                    "] does not match reachability");
      }
      const Path path = get_path(run.preds, s, u);
      if (u == s) {
        if (run.preds[u] != kNoVertex || !path.empty() || run.labels[u] != 0) {
          return fail(tag + ": source row malformed");
        }
        continue;
      }
      if (!reachable) {
        if (run.preds[u] != kNoVertex || !path.empty()) {
          return fail(tag + ": unreachable vertex " + std::to_string(u) +
                      " has a predecessor");
        }
        continue;
      }
      if (path.empty() || path.front() != s || path.back() != u) {
        return fail(tag + ": path endpoints wrong for vertex " +
                    std::to_string(u));
      }
      std::set<Vertex> seen(path.begin(), path.end());
      if (seen.size() != path.size()) {
        return fail(tag + ": path to vertex " + std::to_string(u) +
                    " repeats a vertex");
      }
      if (path_weight(g, path) != run.labels[u]) {
        return fail(tag + ": path weight differs from label for vertex " +
                    std::to_string(u));
      }
    }
  }
  return {};
}

bool is_symmetric(const Graph& g) {
  std::vector<std::tuple<Vertex, Vertex, Weight>> arcs;
  arcs.reserve(g.m());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (const Neighbour& nb : g.neighbours(u)) {
      arcs.emplace_back(u, nb.vertex, nb.weight);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (const Neighbour& nb : g.neighbours(u)) {
      if (!std::binary_search(arcs.begin(), arcs.end(),
                              std::tuple{nb.vertex, u, nb.weight})) {
        return false;
      }
    }
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) {
    return true;
  }
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const Neighbour& nb : g.neighbours(u)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
  }
  return reached == g.n();
}

Graph make_cycle_graph(std::uint32_t n, Weight w) {
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u) {
    builder.add_arc(u, (u + 1) % n, static_cast<std::int64_t>(w));
  }
  return builder.build();
}

namespace {

double orient2d(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// incircle_det with a forward error bound: |det| below the bound counts as
// "on the circle", never as a violation.
bool strictly_inside(const Point& a, const Point& b, const Point& c,
                     const Point& p) {
  const double adx = a.x - p.x, ady = a.y - p.y;
  const double bdx = b.x - p.x, bdy = b.y - p.y;
  const double cdx = c.x - p.x, cdy = c.y - p.y;
  const double ad = adx * adx + ady * ady;
  const double bd = bdx * bdx + bdy * bdy;
  const double cd = cdx * cdx + cdy * cdy;
  const double det = adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
                     ad * (bdx * cdy - bdy * cdx);
  const double perm = std::abs(adx) * (std::abs(bdy) * cd + bd * std::abs(cdy)) +
                      std::abs(ady) * (std::abs(bdx) * cd + bd * std::abs(cdx)) +
                      ad * (std::abs(bdx * cdy) + std::abs(bdy * cdx));
  return det > 1e-12 * perm;
}

}  // namespace

CheckOutcome empty_circumcircles(std::span<const Point> points,
                                 std::span<const Triangle> triangles) {
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    Triangle tri = triangles[t];
    const double area = orient2d(points[tri.v[0]], points[tri.v[1]],
                                 points[tri.v[2]]);
    if (area == 0) {
      return {false, "triangle " + std::to_string(t) + " is degenerate"};
    }
    if (area < 0) {
      std::swap(tri.v[1], tri.v[2]);
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (p == tri.v[0] || p == tri.v[1] || p == tri.v[2]) {
        continue;
      }
      if (strictly_inside(points[tri.v[0]], points[tri.v[1]], points[tri.v[2]],
                          points[p])) {
        return {false, "point " + std::to_string(p) +
                           " lies inside the circumcircle of triangle " +
                           std::to_string(t)};
      }
    }
  }
  return {};
}

}  // namespace sssp::testsupport
