#include "gwi/distance.hpp"

#include <queue>

namespace gwi {

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "bfs source out of range");
  }
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push(u);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  d_.resize(n, n);
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = bfs_distances(g, s);
    d_.row(s) = Eigen::Map<const Eigen::Matrix<Distance, 1, Eigen::Dynamic>>(row.data(), n);
  }
}

bool DistanceMatrix::connected() const {
  return d_.size() > 0 && (d_.array() != kUnreachable).all();
}

Distance DistanceMatrix::diameter() const { return d_.size() == 0 ? 0 : d_.maxCoeff(); }

}  // namespace gwi
