#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "gwi/graph.hpp"

namespace gwi {

using Distance = std::int32_t;
inline constexpr Distance kUnreachable = -1;

/// Hop distances from `source`; kUnreachable for vertices in other components.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances, one BFS per row.
class DistanceMatrix {
 public:
  using Storage = Eigen::Matrix<Distance, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const noexcept { return static_cast<std::size_t>(d_.rows()); }
  Distance operator()(Vertex u, Vertex v) const { return d_(u, v); }
  const Storage& matrix() const noexcept { return d_; }

  bool connected() const;
  /// Largest finite distance; 0 for a single vertex.
  Distance diameter() const;

 private:
  Storage d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

}  // namespace gwi
