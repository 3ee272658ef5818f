#include "sssp/solver.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "sssp/fib_heap.hpp"

namespace sssp {

namespace {

void check_source(const Graph& g, Vertex s) {
  if (s >= g.n()) {
    throw std::out_of_range("source vertex " + std::to_string(s) +
                            " out of range for n = " + std::to_string(g.n()));
  }
}

struct RunState {
  explicit RunState(std::size_t n, Vertex s)
      : labels(n, kInfinity), preds(n, kNoVertex), settled(n, false) {
    labels[s] = 0;
  }

  std::vector<Weight> labels;
  std::vector<Vertex> preds;
  std::vector<bool> settled;

  ShortestPathResult finish(bool complete) && {
    return ShortestPathResult{std::move(labels), std::move(preds),
                              std::move(settled), complete};
  }
};

#ifndef NDEBUG
// Dijkstra's fundamental invariant: settled labels are nondecreasing.
struct MonotoneCheck {
  Weight last = 0;
  void operator()(Weight key) {
    assert(key >= last);
    last = key;
  }
};
#else
struct MonotoneCheck {
  void operator()(Weight) {}
};
#endif

ShortestPathResult dijkstra_basic(const Graph& g, Vertex s,
                                  std::optional<Vertex> target) {
  RunState st(g.n(), s);
  std::vector<Vertex> candidates{s};  // finite label, not yet settled
  MonotoneCheck monotone;
  bool complete = true;

  while (!candidates.empty()) {
    std::size_t u_pos = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      if (st.labels[candidates[i]] < st.labels[candidates[u_pos]]) {
        u_pos = i;
      }
    }
    const Vertex u = candidates[u_pos];
    candidates[u_pos] = candidates.back();
    candidates.pop_back();

    st.settled[u] = true;
    monotone(st.labels[u]);
    if (target && u == *target) {
      complete = false;
      break;
    }
    for (const Neighbour& nb : g.neighbours(u)) {
      const Vertex v = nb.vertex;
      if (st.settled[v]) {
        continue;
      }
      const Weight relaxed = checked_add(st.labels[u], nb.weight);
      if (relaxed < st.labels[v]) {
        if (st.labels[v] == kInfinity) {
          candidates.push_back(v);
        }
        st.labels[v] = relaxed;
        st.preds[v] = u;
      }
    }
  }
  return std::move(st).finish(complete);
}

ShortestPathResult dijkstra_tree(const Graph& g, Vertex s,
                                 std::optional<Vertex> target) {
  RunState st(g.n(), s);
  std::set<std::pair<Weight, Vertex>> queue;  // lexicographic (label, vertex)
  queue.emplace(0, s);
  MonotoneCheck monotone;
  bool complete = true;

  while (!queue.empty()) {
    const auto [key, u] = *queue.begin();
    queue.erase(queue.begin());

    st.settled[u] = true;
    monotone(key);
    if (target && u == *target) {
      complete = false;
      break;
    }
    for (const Neighbour& nb : g.neighbours(u)) {
      const Vertex v = nb.vertex;
      if (st.settled[v]) {
        continue;
      }
      const Weight relaxed = checked_add(st.labels[u], nb.weight);
      if (relaxed < st.labels[v]) {
        if (st.labels[v] != kInfinity) {
          queue.erase({st.labels[v], v});
        }
        queue.emplace(relaxed, v);
        st.labels[v] = relaxed;
        st.preds[v] = u;
      }
    }
  }
  return std::move(st).finish(complete);
}

ShortestPathResult dijkstra_heap(const Graph& g, Vertex s,
                                 std::optional<Vertex> target) {
  RunState st(g.n(), s);
  using Entry = std::pair<Weight, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, s);
  MonotoneCheck monotone;
  bool complete = true;

  while (!queue.empty()) {
    const auto [key, u] = queue.top();
    queue.pop();
    if (st.settled[u]) {
      continue;  // stale duplicate left behind by lazy deletion
    }

    st.settled[u] = true;
    monotone(key);
    if (target && u == *target) {
      complete = false;
      break;
    }
    for (const Neighbour& nb : g.neighbours(u)) {
      const Vertex v = nb.vertex;
      if (st.settled[v]) {
        continue;
      }
      const Weight relaxed = checked_add(st.labels[u], nb.weight);
      if (relaxed < st.labels[v]) {
        queue.emplace(relaxed, v);  // inserted alongside any stale entry
        st.labels[v] = relaxed;
        st.preds[v] = u;
      }
    }
  }
  return std::move(st).finish(complete);
}

ShortestPathResult dijkstra_fibonacci(const Graph& g, Vertex s,
                                      std::optional<Vertex> target) {
  RunState st(g.n(), s);
  FibHeap queue(g.n());
  queue.insert(s, 0);
  MonotoneCheck monotone;
  bool complete = true;

  while (!queue.empty()) {
    const auto [u, key] = queue.extract_min();

    st.settled[u] = true;
    monotone(key);
    if (target && u == *target) {
      complete = false;
      break;
    }
    for (const Neighbour& nb : g.neighbours(u)) {
      const Vertex v = nb.vertex;
      if (st.settled[v]) {
        continue;
      }
      const Weight relaxed = checked_add(st.labels[u], nb.weight);
      if (relaxed < st.labels[v]) {
        if (st.labels[v] == kInfinity) {
          queue.insert(v, relaxed);
        } else {
          queue.decrease_key(v, relaxed);
        }
        st.labels[v] = relaxed;
        st.preds[v] = u;
      }
    }
  }
  return std::move(st).finish(complete);
}

ShortestPathResult dispatch(const Graph& g, Vertex s, std::optional<Vertex> target,
                            Variant variant) {
  check_source(g, s);
  switch (variant) {
    case Variant::basic:
      return dijkstra_basic(g, s, target);
    case Variant::tree:
      return dijkstra_tree(g, s, target);
    case Variant::heap:
      return dijkstra_heap(g, s, target);
    case Variant::fib:
      return dijkstra_fibonacci(g, s, target);
  }
  throw std::invalid_argument("unknown solver variant");
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::basic:
      return "basic";
    case Variant::tree:
      return "tree";
    case Variant::heap:
      return "heap";
    case Variant::fib:
      return "fib";
  }
  return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  for (Variant v : kAllVariants) {
    if (variant_name(v) == name) {
      return v;
    }
  }
  return std::nullopt;
}

ShortestPathResult solve_basic(const Graph& g, Vertex s) {
  return dispatch(g, s, std::nullopt, Variant::basic);
}

ShortestPathResult solve_tree(const Graph& g, Vertex s) {
  return dispatch(g, s, std::nullopt, Variant::tree);
}

ShortestPathResult solve_binary_heap(const Graph& g, Vertex s) {
  return dispatch(g, s, std::nullopt, Variant::heap);
}

ShortestPathResult solve_fibonacci(const Graph& g, Vertex s) {
  return dispatch(g, s, std::nullopt, Variant::fib);
}

ShortestPathResult solve(const Graph& g, Vertex s, Variant variant) {
  return dispatch(g, s, std::nullopt, variant);
}

ShortestPathResult solve_target(const Graph& g, Vertex s, Vertex t, Variant variant) {
  if (t >= g.n()) {
    throw std::out_of_range("target vertex " + std::to_string(t) +
                            " out of range for n = " + std::to_string(g.n()));
  }
  return dispatch(g, s, t, variant);
}

Path get_path(std::span<const Vertex> preds, Vertex s, Vertex u) {
  Path path;
  if (u >= preds.size() || preds[u] == kNoVertex) {
    return path;
  }
  Vertex x = u;
  while (x != s) {
    path.push_back(x);
    x = preds[x];
    if (path.size() > preds.size()) {
      throw std::invalid_argument("get_path: predecessor array contains a cycle");
    }
  }
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

ShortestPathResult bellman_ford(const Graph& g, Vertex s) {
  check_source(g, s);
  RunState st(g.n(), s);

  // n-1 full relaxation rounds, stopping early once a round changes nothing.
  for (std::size_t round = 1; round < g.n(); ++round) {
    bool changed = false;
    for (Vertex u = 0; u < g.n(); ++u) {
      if (st.labels[u] == kInfinity) {
        continue;
      }
      for (const Neighbour& nb : g.neighbours(u)) {
        const Weight relaxed = checked_add(st.labels[u], nb.weight);
        if (relaxed < st.labels[nb.vertex]) {
          st.labels[nb.vertex] = relaxed;
          st.preds[nb.vertex] = u;
          changed = true;
        }
      }
    }
    if (!changed) {
      break;
    }
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    st.settled[u] = (st.labels[u] != kInfinity);
  }
  return std::move(st).finish(true);
}

}  // namespace sssp
