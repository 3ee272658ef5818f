#include "sssp/graph.hpp"

#include <cassert>

namespace sssp {

void GraphBuilder::add_arc(Vertex u, Vertex v, std::int64_t w) {
  if (built_) {
    throw std::logic_error("add_arc: graph already built");
  }
  if (u >= adj_.size() || v >= adj_.size()) {
    throw std::out_of_range("add_arc: arc (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") out of range for n = " +
                            std::to_string(adj_.size()));
  }
  if (w < 0) {
    throw std::invalid_argument(
        "add_arc: negative weights unsupported; use Bellman-Ford oracle");
  }
  adj_[u].push_back(Neighbour{v, static_cast<Weight>(w)});
  ++m_;
}

Graph GraphBuilder::build() {
  if (built_) {
    throw std::logic_error("build: graph already built");
  }
  built_ = true;

  Graph g;
  g.offsets_.resize(adj_.size() + 1, 0);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    g.offsets_[u + 1] = g.offsets_[u] + adj_[u].size();
  }
  assert(g.offsets_.back() == m_);

  g.arcs_.reserve(m_);
  for (auto& list : adj_) {
    g.arcs_.insert(g.arcs_.end(), list.begin(), list.end());
    list.clear();
    list.shrink_to_fit();
  }
  adj_.clear();
  return g;
}

}  // namespace sssp
