#include "gwi/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gwi {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InfeasibleSpec, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph hypercube_graph(unsigned dim) {
  if (dim > 20) throw Error(ErrorCode::InfeasibleSpec, "hypercube dimension too large");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (unsigned b = 0; b < dim; ++b) {
      const Vertex u = v ^ (Vertex{1} << b);
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(u, static_cast<Vertex>(a + j));
  }
  return Graph(a + b, edges);
}

Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> code) {
  if (n == 0) throw Error(ErrorCode::InfeasibleSpec, "tree needs at least one vertex");
  if (n == 1) return Graph(1, {});
  if (code.size() != n - 2) {
    throw Error(ErrorCode::InfeasibleSpec, "Prüfer code must have length n-2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : code) {
    if (x >= n) throw Error(ErrorCode::VertexOutOfRange, "Prüfer entry out of range");
    ++degree[x];
  }
  // Linear-time decode: `leaf` is the smallest current leaf.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex x : code) {
    edges.emplace_back(static_cast<Vertex>(leaf), x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 1) return tree_from_pruefer(n, {});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& x : code) x = pick(rng);
  return tree_from_pruefer(n, code);
}

Graph random_connected_graph(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  const Graph tree = random_tree(n, rng);
  auto edges = tree.edges();
  const std::size_t max_edges = n * (n - 1) / 2;
  const std::size_t target = std::min(max_edges, edges.size() + extra);
  std::set<Edge> present(edges.begin(), edges.end());
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (present.size() < target) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (present.insert({u, v}).second) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph attach_pendant_paths(const Graph& g, Vertex w, std::size_t p, std::size_t q) {
  if (w >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "attachment vertex out of range");
  auto edges = g.edges();
  auto next = static_cast<Vertex>(g.order());
  for (std::size_t len : {p, q}) {
    Vertex prev = w;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, edges);
}

}  // namespace gwi
