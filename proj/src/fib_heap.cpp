#include "sssp/fib_heap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sssp {

FibHeap::~FibHeap() {
  // Every live node has exactly one handle, so the table owns them all.
  for (Node* node : handles_) {
    delete node;
  }
}

void FibHeap::insert(Vertex v, Weight key) {
  if (handles_[v] != nullptr) {
    throw std::logic_error("FibHeap::insert: vertex " + std::to_string(v) +
                           " already has a live entry");
  }
  Node* node = new Node{key, v};
  node->left = node;
  node->right = node;
  handles_[v] = node;
  move_to_root(node);
  ++count_;
}

std::pair<Vertex, Weight> FibHeap::extract_min() {
  if (min_ == nullptr) {
    throw std::logic_error("FibHeap::extract_min: heap is empty");
  }
  Node* top = min_;

  // Promote all children to the root ring.
  Node* child = top->child;
  for (int i = top->degree; i > 0; --i) {
    Node* next = child->right;
    child->parent = nullptr;
    child->left = child;
    child->right = child;
    move_to_root(child);
    child = next;
  }
  top->child = nullptr;
  top->degree = 0;

  Node* successor = (top->right == top) ? nullptr : top->right;
  remove_from_ring(top);
  --count_;
  min_ = successor;
  if (min_ != nullptr) {
    consolidate();
  }

  const std::pair<Vertex, Weight> result{top->vertex, top->key};
  handles_[top->vertex] = nullptr;
  delete top;
  return result;
}

void FibHeap::decrease_key(Vertex v, Weight new_key) {
  Node* node = handles_[v];
  if (node == nullptr) {
    throw std::logic_error("FibHeap::decrease_key: vertex " + std::to_string(v) +
                           " has no live entry");
  }
  if (new_key > node->key) {
    return;  // increase attempts are silently ignored
  }
  node->key = new_key;
  Node* parent = node->parent;
  if (parent != nullptr && node->key < parent->key) {
    cut(node);
    cascading_cut(parent);
  }
  if (node->key < min_->key) {
    min_ = node;
  }
}

void FibHeap::move_to_root(Node* node) {
  node->parent = nullptr;
  node->mark = false;
  if (min_ == nullptr) {
    node->left = node;
    node->right = node;
    min_ = node;
    return;
  }
  Node* min_left = min_->left;
  min_left->right = node;
  node->left = min_left;
  node->right = min_;
  min_->left = node;
  if (node->key < min_->key) {
    min_ = node;
  }
}

void FibHeap::remove_from_ring(Node* node) {
  if (node->right != node) {
    node->right->left = node->left;
    node->left->right = node->right;
  }
  Node* parent = node->parent;
  if (parent != nullptr) {
    parent->child = (parent->degree == 1) ? nullptr : node->right;
    --parent->degree;
  }
  node->left = node;
  node->right = node;
}

void FibHeap::cut(Node* node) {
  remove_from_ring(node);
  move_to_root(node);
}

void FibHeap::cascading_cut(Node* node) {
  // Iterative form; the chain of marked ancestors can be long.
  while (true) {
    Node* parent = node->parent;
    if (parent == nullptr) {
      return;
    }
    if (!node->mark) {
      node->mark = true;
      return;
    }
    cut(node);
    node = parent;
  }
}

void FibHeap::add_child(Node* parent, Node* child) {
  child->parent = parent;
  if (parent->degree == 0) {
    parent->child = child;
    child->left = child;
    child->right = child;
  } else {
    Node* first = parent->child;
    Node* first_left = first->left;
    first_left->right = child;
    child->left = first_left;
    child->right = first;
    first->left = child;
  }
  ++parent->degree;
}

void FibHeap::link(Node* high, Node* low) {
  remove_from_ring(high);
  add_child(low, high);
  high->mark = false;
}

void FibHeap::consolidate() {
  if (count_ < 2) {
    return;
  }
  // Snapshot the root ring first; linking edits it under us otherwise.
  scratch_roots_.clear();
  Node* it = min_;
  do {
    scratch_roots_.push_back(it);
    it = it->right;
  } while (it != min_);

  std::vector<Node*>& table = degree_table_;
  table.clear();
  for (Node* node : scratch_roots_) {
    int deg = node->degree;
    while (true) {
      if (static_cast<std::size_t>(deg) >= table.size()) {
        table.resize(deg + 1, nullptr);
      }
      Node* occupant = table[deg];
      if (occupant == nullptr) {
        table[deg] = node;
        break;
      }
      // Strict comparison: on equal keys the node being consolidated keeps
      // its place and the occupant is linked beneath it.
      if (node->key > occupant->key) {
        std::swap(node, occupant);
      }
      link(occupant, node);
      table[deg] = nullptr;
      ++deg;
    }
  }

  min_ = nullptr;
  for (Node* node : table) {
    if (node != nullptr) {
      node->left = node;
      node->right = node;
      move_to_root(node);
    }
  }
}

void FibHeap::check_invariants() const {
  const auto fail = [](const std::string& what) {
    throw std::logic_error("FibHeap invariant violated: " + what);
  };

  std::size_t live_handles = 0;
  for (const Node* node : handles_) {
    if (node != nullptr) {
      ++live_handles;
    }
  }
  if (live_handles != count_) {
    fail("handle count " + std::to_string(live_handles) + " != size " +
         std::to_string(count_));
  }
  if (min_ == nullptr) {
    if (count_ != 0) {
      fail("null min with nonzero count");
    }
    return;
  }

  std::size_t seen = 0;
  int max_degree = 0;
  // Walk every tree from the root ring. Ring walks are capped so a corrupt
  // ring reports a failure instead of looping.
  std::vector<const Node*> stack;
  const Node* root = min_;
  std::size_t ring_steps = 0;
  do {
    if (++ring_steps > count_) {
      fail("root ring does not close");
    }
    if (root->parent != nullptr) {
      fail("root ring node has a parent");
    }
    if (root->mark) {
      fail("marked root");
    }
    if (root->key < min_->key) {
      fail("min does not hold the minimum key");
    }
    stack.push_back(root);
    root = root->right;
  } while (root != min_);

  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    ++seen;
    if (seen > count_) {
      fail("more reachable nodes than count");
    }
    if (node->left->right != node || node->right->left != node) {
      fail("sibling ring inconsistent at vertex " + std::to_string(node->vertex));
    }
    if (node->vertex >= handles_.size() || handles_[node->vertex] != node) {
      fail("handle table does not point at live node for vertex " +
           std::to_string(node->vertex));
    }
    max_degree = std::max(max_degree, node->degree);

    int children = 0;
    if (node->child != nullptr) {
      const Node* child = node->child;
      do {
        if (static_cast<std::size_t>(++children) > count_) {
          fail("child ring does not close");
        }
        if (child->parent != node) {
          fail("child does not point back to parent");
        }
        if (child->key < node->key) {
          fail("heap order violated between vertices " +
               std::to_string(node->vertex) + " and " +
               std::to_string(child->vertex));
        }
        stack.push_back(child);
        child = child->right;
      } while (child != node->child);
    }
    if (children != node->degree) {
      fail("degree " + std::to_string(node->degree) + " != child count " +
           std::to_string(children));
    }
  }
  if (seen != count_) {
    fail("reachable nodes " + std::to_string(seen) + " != count " +
         std::to_string(count_));
  }

  // Classical bound: max degree <= floor(log_phi(count)).
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const int bound =
      static_cast<int>(std::floor(std::log(static_cast<double>(count_)) /
                                      std::log(phi) +
                                  1e-9));
  if (max_degree > bound) {
    fail("degree " + std::to_string(max_degree) + " exceeds log_phi bound " +
         std::to_string(bound));
  }
}

}  // namespace sssp
