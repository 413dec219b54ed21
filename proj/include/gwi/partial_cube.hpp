#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gwi/graph.hpp"
#include "gwi/oracle.hpp"

namespace gwi {

/// One Θ*-class (cut) with its two halfspaces. side0 holds the lower-numbered vertex.
struct ThetaClass {
  std::vector<Edge> edges;
  std::vector<Vertex> side0;
  std::vector<Vertex> side1;
};

struct ThetaPartition {
  std::vector<ThetaClass> classes;

  std::size_t size() const noexcept { return classes.size(); }
};

/// Edges e = xy and f = uv are Θ-related when d(x,u) + d(y,v) != d(x,v) + d(y,u).
/// Classes are the connected components of that relation, ordered by their
/// smallest edge. Uses O(n^2) memory and O(m^2) time.
///
/// Throws Disconnected, NotBipartite, or ClassRemovalNotTwoComponents when
/// deleting some class does not split the graph in two.
ThetaPartition theta_classes(const Graph& g);

/// Row v is the binary label of vertex v; column i says which side of class i it is on.
using CubeCoordinates = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class CubeRejection { Disconnected, NotBipartite, ClassRemovalNotTwoComponents, NotIsometric };

std::string_view to_string(CubeRejection reason) noexcept;

struct PartialCubeVerdict {
  bool accepted = false;
  std::optional<CubeRejection> reason;
  std::string detail;
  std::optional<ThetaPartition> partition;
  std::optional<CubeCoordinates> coordinates;

  explicit operator bool() const noexcept { return accepted; }
};

/// Full recognition: bipartite, every class splits the graph in two, and the
/// induced labels are an isometric embedding (Hamming = BFS distance on all pairs).
PartialCubeVerdict is_partial_cube(const Graph& g);

CubeCoordinates cube_coordinates(const Graph& g, const ThetaPartition& p);

inline std::size_t hamming_distance(const CubeCoordinates& c, Vertex u, Vertex v) {
  return static_cast<std::size_t>((c.row(u).array() != c.row(v).array()).count());
}

/// Per class, the number of degree-k vertices in side0 and side1.
std::vector<std::pair<Count, Count>> halfspace_degree_counts(const Graph& g, const ThetaPartition& p,
                                                             unsigned k);

/// TW_k as the sum over cuts of the product of degree-k halfspace counts.
/// Verifies the partial-cube hypothesis first and throws NotPartialCube otherwise.
Count twk_cut(const Graph& g, unsigned k);
/// Trusts a partition already obtained from an accepted verdict.
Count twk_cut(const Graph& g, const ThetaPartition& p, unsigned k);

}  // namespace gwi
