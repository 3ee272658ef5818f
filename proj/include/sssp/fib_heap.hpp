#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sssp/graph.hpp"

namespace sssp {

// Fibonacci heap keyed by 64-bit labels and addressed by vertex index.
// Supports exactly what Dijkstra's algorithm needs: O(1) amortized insert and
// decrease_key, O(log n) amortized extract_min. Each vertex may have at most
// one live entry; entries are looked up through a dense handle table of the
// capacity given at construction.
//
// Single-owner. A heap may be moved between threads when not in use.
class FibHeap {
 public:
  explicit FibHeap(std::size_t vertex_capacity)
      : handles_(vertex_capacity, nullptr) {}

  ~FibHeap();

  FibHeap(FibHeap&& other) noexcept { swap(other); }
  FibHeap& operator=(FibHeap&& other) noexcept {
    FibHeap tmp(std::move(other));
    swap(tmp);
    return *this;
  }
  FibHeap(const FibHeap&) = delete;
  FibHeap& operator=(const FibHeap&) = delete;

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(Vertex v) const { return handles_[v] != nullptr; }

  // New singleton node in the root ring. Throws std::logic_error if the
  // vertex already has a live entry.
  void insert(Vertex v, Weight key);

  // Removes and returns the minimum-key entry, promoting its children and
  // consolidating the root ring. Throws std::logic_error when empty.
  std::pair<Vertex, Weight> extract_min();

  // Lowers the key of v's live entry, cutting it to the root ring (with
  // cascading cuts) if heap order is violated. An attempt to increase the key
  // is a silent no-op. Throws std::logic_error if v has no live entry.
  void decrease_key(Vertex v, Weight new_key);

  // Full structural audit: heap order, sibling-ring consistency, degrees,
  // marks, handle-table agreement, node count, min correctness, and the
  // golden-ratio degree bound. Throws std::logic_error naming the first
  // violation. Test/debug use; O(size()).
  void check_invariants() const;

 private:
  struct Node {
    Weight key;
    Vertex vertex;
    int degree = 0;
    bool mark = false;
    Node* parent = nullptr;
    Node* child = nullptr;
    Node* left = nullptr;
    Node* right = nullptr;
  };

  void swap(FibHeap& other) noexcept {
    std::swap(min_, other.min_);
    std::swap(count_, other.count_);
    handles_.swap(other.handles_);
    degree_table_.swap(other.degree_table_);
    scratch_roots_.swap(other.scratch_roots_);
  }

  // Splices a parentless node into the root ring, updating min_.
  void move_to_root(Node* node);
  // Unlinks a node from its sibling ring and from its parent's accounting.
  void remove_from_ring(Node* node);
  void cut(Node* node);
  void cascading_cut(Node* node);
  void add_child(Node* parent, Node* child);
  // Makes `high` a child of `low` (keys: low->key <= high->key).
  void link(Node* high, Node* low);
  // Pairwise-links roots of equal degree until all root degrees are
  // distinct, then re-identifies min_.
  void consolidate();

  Node* min_ = nullptr;
  std::size_t count_ = 0;
  std::vector<Node*> handles_;
  std::vector<Node*> degree_table_;   // consolidate scratch, reused across calls
  std::vector<Node*> scratch_roots_;  // root-ring snapshot, reused across calls
};

}  // namespace sssp
