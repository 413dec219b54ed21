#include "gwi/partial_cube.hpp"

#include <algorithm>
#include <numeric>

#include "gwi/distance.hpp"

namespace gwi {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

bool theta_related(const DistanceMatrix& d, const Edge& e, const Edge& f) {
  const auto [x, y] = e;
  const auto [u, v] = f;
  return d(x, u) + d(y, v) != d(x, v) + d(y, u);
}

// Components of g after deleting every edge whose class id equals `removed`.
std::pair<std::vector<std::uint32_t>, std::size_t> components_without(
    const Graph& g, const std::vector<std::vector<std::size_t>>& edge_class, std::size_t removed) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(g.order(), kUnset);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(count++);
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const auto nb = g.neighbors(v);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        if (edge_class[v][j] == removed || label[nb[j]] != kUnset) continue;
        label[nb[j]] = id;
        stack.push_back(nb[j]);
      }
    }
  }
  return {std::move(label), count};
}

}  // namespace

std::string_view to_string(CubeRejection reason) noexcept {
  switch (reason) {
    case CubeRejection::Disconnected: return "Disconnected";
    case CubeRejection::NotBipartite: return "NotBipartite";
    case CubeRejection::ClassRemovalNotTwoComponents: return "ClassRemovalNotTwoComponents";
    case CubeRejection::NotIsometric: return "NotIsometric";
  }
  return "Unknown";
}

ThetaPartition theta_classes(const Graph& g) {
  require_connected(g);
  if (!is_bipartite(g)) throw Error(ErrorCode::NotBipartite, "graph is not bipartite");

  const DistanceMatrix d(g);
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  DisjointSets sets(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (theta_related(d, edges[i], edges[j])) sets.unite(i, j);
    }
  }

  // Roots are the smallest edge index of each class, so ascending roots give
  // classes ordered by their smallest edge.
  std::vector<std::size_t> class_of_root(m, m);
  ThetaPartition partition;
  std::vector<std::size_t> class_of_edge(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = sets.find(i);
    if (class_of_root[root] == m) {
      class_of_root[root] = partition.classes.size();
      partition.classes.emplace_back();
    }
    class_of_edge[i] = class_of_root[root];
    partition.classes[class_of_edge[i]].edges.push_back(edges[i]);
  }

  std::vector<std::vector<std::size_t>> edge_class(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      const Edge e{std::min(u, v), std::max(u, v)};
      const auto idx = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) -
                                                edges.begin());
      edge_class[v].push_back(class_of_edge[idx]);
    }
  }

  for (std::size_t c = 0; c < partition.size(); ++c) {
    const auto [label, count] = components_without(g, edge_class, c);
    if (count != 2) {
      throw Error(ErrorCode::ClassRemovalNotTwoComponents,
                  "removing theta class " + std::to_string(c) + " leaves " + std::to_string(count) +
                      " components");
    }
    auto& cls = partition.classes[c];
    for (Vertex v = 0; v < g.order(); ++v) (label[v] == 0 ? cls.side0 : cls.side1).push_back(v);
  }
  return partition;
}

CubeCoordinates cube_coordinates(const Graph& g, const ThetaPartition& p) {
  CubeCoordinates coords = CubeCoordinates::Zero(static_cast<Eigen::Index>(g.order()),
                                                 static_cast<Eigen::Index>(p.size()));
  for (std::size_t c = 0; c < p.size(); ++c) {
    for (Vertex v : p.classes[c].side1) coords(v, static_cast<Eigen::Index>(c)) = 1;
  }
  return coords;
}

PartialCubeVerdict is_partial_cube(const Graph& g) {
  PartialCubeVerdict verdict;
  auto reject = [&](CubeRejection reason, std::string detail) {
    verdict.reason = reason;
    verdict.detail = std::move(detail);
    return verdict;
  };
  if (!is_connected(g)) return reject(CubeRejection::Disconnected, "graph is not connected");
  if (!is_bipartite(g)) return reject(CubeRejection::NotBipartite, "graph contains an odd cycle");

  ThetaPartition partition;
  try {
    partition = theta_classes(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClassRemovalNotTwoComponents) throw;
    return reject(CubeRejection::ClassRemovalNotTwoComponents, e.what());
  }

  auto coords = cube_coordinates(g, partition);
  const DistanceMatrix d(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto h = hamming_distance(coords, u, v);
      if (h != static_cast<std::size_t>(d(u, v))) {
        return reject(CubeRejection::NotIsometric,
                      "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                          ": Hamming " + std::to_string(h) + " != distance " +
                          std::to_string(d(u, v)));
      }
    }
  }
  verdict.accepted = true;
  verdict.partition = std::move(partition);
  verdict.coordinates = std::move(coords);
  return verdict;
}

std::vector<std::pair<Count, Count>> halfspace_degree_counts(const Graph& g, const ThetaPartition& p,
                                                             unsigned k) {
  auto count_k = [&](const std::vector<Vertex>& side) {
    return static_cast<Count>(
        std::count_if(side.begin(), side.end(), [&](Vertex v) { return g.degree(v) == k; }));
  };
  std::vector<std::pair<Count, Count>> counts;
  counts.reserve(p.size());
  for (const auto& cls : p.classes) counts.emplace_back(count_k(cls.side0), count_k(cls.side1));
  return counts;
}

Count twk_cut(const Graph& g, const ThetaPartition& p, unsigned k) {
  Count total = 0;
  for (const auto& [c0, c1] : halfspace_degree_counts(g, p, k)) total += c0 * c1;
  return total;
}

Count twk_cut(const Graph& g, unsigned k) {
  auto verdict = is_partial_cube(g);
  if (!verdict) {
    throw Error(ErrorCode::NotPartialCube,
                "not a partial cube (" + std::string(to_string(*verdict.reason)) + "): " +
                    verdict.detail);
  }
  return twk_cut(g, *verdict.partition, k);
}

}  // namespace gwi
