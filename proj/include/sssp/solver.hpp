#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sssp/graph.hpp"

namespace sssp {

// The interchangeable priority-queue strategies behind Dijkstra's algorithm.
enum class Variant {
  basic,  // linear scan over a candidate list, O(n^2)
  tree,   // balanced ordered set, erase+insert decrease-key, O(m log n)
  heap,   // binary heap with lazy deletion (no decrease-key), O(m log m)
  fib,    // Fibonacci heap with true decrease-key, O(m + n log n)
};

inline constexpr Variant kAllVariants[] = {Variant::basic, Variant::tree,
                                           Variant::heap, Variant::fib};

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

// Labels and predecessors of one solver run. labels[u] == kInfinity means no
// path is known; preds[u] == kNoVertex means u has no recorded predecessor
// (the source, and every unreached vertex).
struct ShortestPathResult {
  std::vector<Weight> labels;
  std::vector<Vertex> preds;
  // settled[u] is true once u's label is final ("distinguished"). On a full
  // run that is every reachable vertex; an early-exit run leaves the rest
  // provisional.
  std::vector<bool> settled;
  // False when the run stopped early at a target; only `settled` entries are
  // final in that case.
  bool complete = true;
};

// Single-source shortest paths from s, one entry point per queue strategy.
// All four return identical labels; predecessor arrays may differ wherever
// shortest paths tie. Throws std::out_of_range on a bad source and
// std::overflow_error if a path length would exceed the 64-bit label range.
ShortestPathResult solve_basic(const Graph& g, Vertex s);
ShortestPathResult solve_tree(const Graph& g, Vertex s);
ShortestPathResult solve_binary_heap(const Graph& g, Vertex s);
ShortestPathResult solve_fibonacci(const Graph& g, Vertex s);

ShortestPathResult solve(const Graph& g, Vertex s, Variant variant);

// Single-source single-target: stops as soon as t is settled. labels[t] and
// the s-t path are final; check `settled` before trusting anything else.
ShortestPathResult solve_target(const Graph& g, Vertex s, Vertex t, Variant variant);

// Vertex sequence of the recorded s-u path, empty when u has no predecessor
// (unreachable, or u == s).
using Path = std::vector<Vertex>;
Path get_path(std::span<const Vertex> preds, Vertex s, Vertex u);

// O(nm) label-correcting oracle; exact on any nonnegative-weight graph.
// Test/verification use only, never called by the CLI or bench paths.
ShortestPathResult bellman_ford(const Graph& g, Vertex s);

}  // namespace sssp
