#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gwi/error.hpp"

namespace gwi {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable after construction. The constructor rejects self-loops,
/// repeated edges (in either orientation) and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);

/// Degrees in non-increasing order.
std::vector<std::size_t> degree_sequence(const Graph& g);

/// Component label per vertex (labels are 0.. in order of lowest vertex), and the count.
std::pair<std::vector<std::uint32_t>, std::size_t> connected_components(const Graph& g);

void require_connected(const Graph& g);
void require_tree(const Graph& g);

}  // namespace gwi
