#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sssp {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;

// Label value meaning "no path known". Compares greater than every finite
// label; never produced by arithmetic (see checked_add).
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

// Predecessor slot meaning "none".
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Largest weight accepted on a single arc (weights enter the API as signed
// values so that negative inputs can be rejected with a clear message).
inline constexpr Weight kMaxArcWeight = std::numeric_limits<std::int64_t>::max();

// a + b for finite labels. Throws instead of wrapping, and never returns the
// kInfinity sentinel.
inline Weight checked_add(Weight a, Weight b) {
  if (b >= kInfinity - a) {
    throw std::overflow_error("label overflow: " + std::to_string(a) + " + " +
                              std::to_string(b) + " is not representable");
  }
  return a + b;
}

// One adjacency-list entry: the arc (u, vertex) with its weight.
struct Neighbour {
  Vertex vertex;
  Weight weight;

  friend bool operator==(const Neighbour&, const Neighbour&) = default;
};

// Immutable directed graph with nonnegative integer arc weights. Vertices are
// 0..n-1. Adjacency lists are stored flat and preserve arc insertion order,
// so solver tie behaviour is reproducible. Safe to share across threads once
// built.
class Graph {
 public:
  Graph() = default;

  std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const { return arcs_.size(); }

  std::span<const Neighbour> neighbours(Vertex u) const {
    return {arcs_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<std::size_t> offsets_;  // n + 1 entries once built
  std::vector<Neighbour> arcs_;
};

// Accumulates arcs, then build() freezes them into a Graph. Single-owner;
// not safe for concurrent mutation.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : adj_(n) {}

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }

  // Appends the arc (u, v) with weight w. Parallel arcs and self-loops are
  // allowed; negative weights and out-of-range endpoints are not.
  void add_arc(Vertex u, Vertex v, std::int64_t w);

  // Undirected edge {u, v}: adds both (u, v, w) and (v, u, w).
  void add_edge(Vertex u, Vertex v, std::int64_t w) {
    add_arc(u, v, w);
    add_arc(v, u, w);
  }

  // Freezes the accumulated arcs. The builder is spent afterwards; further
  // add_arc calls throw.
  Graph build();

 private:
  std::vector<std::vector<Neighbour>> adj_;
  std::size_t m_ = 0;
  bool built_ = false;
};

}  // namespace sssp
