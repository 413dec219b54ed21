#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "gwi/graph.hpp"
#include "gwi/oracle.hpp"

namespace gwi {

inline constexpr Vertex kNoParent = static_cast<Vertex>(-1);

/// A tree with a chosen root, parent links and a top-down vertex order.
class RootedTree {
 public:
  /// Throws Error(NotATree) unless t is a tree.
  explicit RootedTree(const Graph& t, Vertex root = 0);
  RootedTree(Graph&&, Vertex = 0) = delete;

  const Graph& graph() const noexcept { return *tree_; }
  Vertex root() const noexcept { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  /// Vertices in BFS order from the root; every parent precedes its children.
  const std::vector<Vertex>& order() const noexcept { return order_; }

 private:
  const Graph* tree_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> order_;
};

/// Subtree distance counts: row v, column i holds the number of vertices at
/// distance i from v inside the subtree rooted at v, for i = 0..k.
class DistTable {
 public:
  using Storage = Eigen::Matrix<Count, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  DistTable(const RootedTree& t, unsigned k);

  unsigned k() const noexcept { return k_; }
  Count operator()(Vertex v, unsigned i) const { return a_(v, i); }
  auto row(Vertex v) const { return a_.row(v); }
  const Storage& matrix() const noexcept { return a_; }

 private:
  unsigned k_;
  Storage a_;
};

inline DistTable build_dist_table(const RootedTree& t, unsigned k) { return DistTable(t, k); }

/// Ordered pairs at distance k (each unordered pair counted twice).
Count gwp_ordered_pairs(const RootedTree& t, const DistTable& a);

/// Number of unordered vertex pairs at distance exactly k, in O(nk).
Count gwp_linear(const RootedTree& t, const DistTable& a);
Count gwp_linear(const RootedTree& t, unsigned k);
/// Roots the tree at vertex 0.
Count gwp_linear(const Graph& t, unsigned k);

/// W_3 of a tree through the Zagreb identity M2 - M1 + m.
Count wp3_zagreb(const Graph& t);

}  // namespace gwi
