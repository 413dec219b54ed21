#pragma once

#include <cstddef>
#include <random>

#include "gwi/graph.hpp"

namespace gwi {

Graph path_graph(std::size_t n);
/// Star on n vertices, center 0.
Graph star_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph hypercube_graph(unsigned dim);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

/// Labeled tree decoded from a Prüfer sequence of length n-2.
Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> code);

/// Uniform random labeled tree on n vertices (uniform Prüfer sequence).
Graph random_tree(std::size_t n, std::mt19937_64& rng);

/// Random tree on n vertices plus `extra` distinct non-tree edges (fewer if the graph saturates).
Graph random_connected_graph(std::size_t n, std::size_t extra, std::mt19937_64& rng);

/// Disjoint union of g and pendant paths of lengths p and q attached at w.
Graph attach_pendant_paths(const Graph& g, Vertex w, std::size_t p, std::size_t q);

}  // namespace gwi
