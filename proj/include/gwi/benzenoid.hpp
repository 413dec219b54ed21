#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gwi/graph.hpp"
#include "gwi/oracle.hpp"
#include "gwi/partial_cube.hpp"

namespace gwi {

/// Vertex position on the hexagonal lattice in scaled integer units: the
/// planar point is (x * sqrt(3)/2, y / 2), with y growing downwards.
struct LatticePoint {
  int x;
  int y;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Coronene/circumcoronene H_k: all hexagons within k-1 rings of a central one.
struct HexSystem {
  unsigned k;
  Graph graph;
  std::vector<LatticePoint> coords;  // vertices are numbered top to bottom, then left to right
};

HexSystem gen_coronene(unsigned k);

enum class CutOrientation { Horizontal, Rising, Falling };

/// Direction shared by every edge of a Θ-class. Horizontal cuts consist of vertical edges.
CutOrientation cut_orientation(const HexSystem& h, const ThetaClass& cls);

/// Number of Θ-classes in each orientation, indexed by CutOrientation.
std::array<std::size_t, 3> orientation_group_sizes(const HexSystem& h, const ThetaPartition& p);

struct HorizontalCut {
  Count above;
  Count above_degree2;
  Count above_degree3;
  Count below_degree3;
};

/// The 2k-1 horizontal cuts C_1..C_{2k-1}, top to bottom, from the actual Θ-classes.
std::vector<HorizontalCut> horizontal_cuts(const HexSystem& h, const ThetaPartition& p);
std::vector<HorizontalCut> horizontal_cuts(const HexSystem& h);

/// (vertices above C_i, degree-2 vertices above C_i) for i = 1..k. Each entry is
/// checked against i(2k+i) and k+2i; a mismatch throws std::logic_error.
std::vector<std::pair<Count, Count>> horizontal_cut_profile(const HexSystem& h);

/// TW_3(H_k) = (1/5)(k-1)k(2k-1)(82k^2 - 82k - 19).
Count tw3_coronene_formula(unsigned k);

/// (3k^2 - 3k)^2 + 2 sum_{i<k} (2ki + i^2 - k - 2i)(6k^2 - 6k - 2ki - i^2 + k + 2i),
/// the contribution of one orientation group (a third of TW_3(H_k)).
Count tw3_coronene_group_sum(unsigned k);

}  // namespace gwi
