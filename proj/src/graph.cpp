#include "gwi/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace gwi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::ClassRemovalNotTwoComponents: return "ClassRemovalNotTwoComponents";
    case ErrorCode::NotPartialCube: return "NotPartialCube";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
  }
  return "Unknown";
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n), m_(edges.size()) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::LoopEdge, "self-loop at vertex " + std::to_string(u));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (auto it = std::adjacent_find(nb.begin(), nb.end()); it != nb.end()) {
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(std::min(v, *it)) +
                                                "," + std::to_string(std::max(v, *it)) + ")");
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

std::pair<std::vector<std::uint32_t>, std::size_t> connected_components(const Graph& g) {
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
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (label[u] == kUnset) {
          label[u] = id;
          stack.push_back(u);
        }
      }
    }
  }
  return {std::move(label), count};
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && connected_components(g).second == 1;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() + 1 == g.order(); }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq(g.order());
  for (Vertex v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

void require_tree(const Graph& g) {
  if (!is_tree(g)) throw Error(ErrorCode::NotATree, "graph is not a tree");
}

}  // namespace gwi
