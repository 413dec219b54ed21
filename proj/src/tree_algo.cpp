#include "gwi/tree_algo.hpp"

#include <cassert>

namespace gwi {

RootedTree::RootedTree(const Graph& t, Vertex root)
    : tree_(&t), root_(root), parent_(t.order(), kNoParent) {
  require_tree(t);
  if (root >= t.order()) throw Error(ErrorCode::VertexOutOfRange, "root out of range");
  order_.reserve(t.order());
  order_.push_back(root);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex v = order_[head];
    for (Vertex u : t.neighbors(v)) {
      if (u != parent_[v]) {
        parent_[u] = v;
        order_.push_back(u);
      }
    }
  }
}

DistTable::DistTable(const RootedTree& t, unsigned k) : k_(k) {
  if (k == 0) throw Error(ErrorCode::OutOfRange, "distance table requires k >= 1");
  const auto n = static_cast<Eigen::Index>(t.graph().order());
  const auto width = static_cast<Eigen::Index>(k) + 1;
  a_.setZero(n, width);
  a_.col(0).setOnes();
  // Reverse BFS order visits children before parents, replacing the recursive DFS.
  const auto& order = t.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const Vertex p = t.parent(v);
    if (p == kNoParent) continue;
    a_.row(p).tail(k) += a_.row(v).head(k);
  }
}

Count gwp_ordered_pairs(const RootedTree& t, const DistTable& a) {
  const auto& g = t.graph();
  const auto k = static_cast<Eigen::Index>(a.k());
  const auto& m = a.matrix();
  Count twice = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    twice += 2 * m(v, k);
    if (k < 2) continue;
    // Pairs (x, y): x below child u at depth i from u, y below v at depth k-1-i
    // but outside u's subtree. Indices k-1-i and k-2-i stay in range for i <= k-2.
    const auto upper = m.row(v).segment(1, k - 1).reverse();
    for (Vertex u : g.neighbors(v)) {
      if (u == t.parent(v)) continue;
      const auto child = m.row(u).head(k - 1);
      twice += child.dot(upper - child.reverse());
    }
  }
  return twice;
}

Count gwp_linear(const RootedTree& t, const DistTable& a) {
  const Count twice = gwp_ordered_pairs(t, a);
  assert(twice % 2 == 0);
  return twice / 2;
}

Count gwp_linear(const RootedTree& t, unsigned k) { return gwp_linear(t, DistTable(t, k)); }

Count gwp_linear(const Graph& t, unsigned k) { return gwp_linear(RootedTree(t, 0), k); }

Count wp3_zagreb(const Graph& t) {
  require_tree(t);
  return zagreb_m2(t) - zagreb_m1(t) + static_cast<Count>(t.size());
}

}  // namespace gwi
