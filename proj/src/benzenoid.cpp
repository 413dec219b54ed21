#include "gwi/benzenoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace gwi {

namespace {

struct TopToBottom {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    return std::tie(a.y, a.x) < std::tie(b.y, b.x);
  }
};

}  // namespace

HexSystem gen_coronene(unsigned k) {
  if (k == 0) throw Error(ErrorCode::InfeasibleSpec, "coronene needs k >= 1");
  const int r_max = static_cast<int>(k) - 1;

  // Pointy-top hexagons in axial coordinates; corner offsets in clockwise order.
  static constexpr std::array<std::pair<int, int>, 6> kCorners{
      {{0, -2}, {1, -1}, {1, 1}, {0, 2}, {-1, 1}, {-1, -1}}};
  std::vector<std::array<LatticePoint, 6>> hexagons;
  for (int q = -r_max; q <= r_max; ++q) {
    for (int r = -r_max; r <= r_max; ++r) {
      if (std::abs(q + r) > r_max) continue;
      const int cx = 2 * q + r, cy = 3 * r;
      std::array<LatticePoint, 6> corners;
      for (std::size_t c = 0; c < 6; ++c) corners[c] = {cx + kCorners[c].first, cy + kCorners[c].second};
      hexagons.push_back(corners);
    }
  }

  std::set<LatticePoint, TopToBottom> points;
  for (const auto& hex : hexagons) points.insert(hex.begin(), hex.end());

  HexSystem h{k, {}, std::vector<LatticePoint>(points.begin(), points.end())};
  std::map<LatticePoint, Vertex> index;
  for (Vertex v = 0; v < h.coords.size(); ++v) index[h.coords[v]] = v;

  std::set<Edge> edges;
  for (const auto& hex : hexagons) {
    for (std::size_t c = 0; c < 6; ++c) {
      Vertex a = index.at(hex[c]), b = index.at(hex[(c + 1) % 6]);
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  const std::vector<Edge> edge_list(edges.begin(), edges.end());
  h.graph = Graph(h.coords.size(), edge_list);
  return h;
}

CutOrientation cut_orientation(const HexSystem& h, const ThetaClass& cls) {
  auto direction = [&](const Edge& e) {
    const auto& a = h.coords[e.first];
    const auto& b = h.coords[e.second];
    const int dx = b.x - a.x, dy = b.y - a.y;
    if (dx == 0) return CutOrientation::Horizontal;
    return (dx > 0) == (dy > 0) ? CutOrientation::Falling : CutOrientation::Rising;
  };
  if (cls.edges.empty()) throw std::logic_error("empty theta class");
  const auto first = direction(cls.edges.front());
  for (const auto& e : cls.edges) {
    if (direction(e) != first) throw std::logic_error("theta class mixes edge directions");
  }
  return first;
}

std::array<std::size_t, 3> orientation_group_sizes(const HexSystem& h, const ThetaPartition& p) {
  std::array<std::size_t, 3> sizes{};
  for (const auto& cls : p.classes) ++sizes[static_cast<std::size_t>(cut_orientation(h, cls))];
  return sizes;
}

std::vector<HorizontalCut> horizontal_cuts(const HexSystem& h, const ThetaPartition& p) {
  const Graph& g = h.graph;
  std::vector<std::pair<int, const ThetaClass*>> horizontal;
  for (const auto& cls : p.classes) {
    if (cut_orientation(h, cls) != CutOrientation::Horizontal) continue;
    const auto& e = cls.edges.front();
    horizontal.emplace_back(h.coords[e.first].y + h.coords[e.second].y, &cls);
  }
  std::ranges::sort(horizontal, {}, &std::pair<int, const ThetaClass*>::first);

  auto count_degree = [&](const std::vector<Vertex>& side, std::size_t deg) {
    return static_cast<Count>(
        std::ranges::count_if(side, [&](Vertex v) { return g.degree(v) == deg; }));
  };
  std::vector<HorizontalCut> cuts;
  for (const auto& [y, cls] : horizontal) {
    // Vertex 0 is the topmost vertex, so side0 lies above every horizontal cut.
    cuts.push_back({static_cast<Count>(cls->side0.size()), count_degree(cls->side0, 2),
                    count_degree(cls->side0, 3), count_degree(cls->side1, 3)});
  }
  return cuts;
}

std::vector<HorizontalCut> horizontal_cuts(const HexSystem& h) {
  return horizontal_cuts(h, theta_classes(h.graph));
}

std::vector<std::pair<Count, Count>> horizontal_cut_profile(const HexSystem& h) {
  const auto cuts = horizontal_cuts(h);
  const auto k = static_cast<Count>(h.k);
  if (cuts.size() != static_cast<std::size_t>(2 * k - 1)) {
    throw std::logic_error("expected 2k-1 horizontal cuts, found " + std::to_string(cuts.size()));
  }
  std::vector<std::pair<Count, Count>> profile;
  for (Count i = 1; i <= k; ++i) {
    const auto& cut = cuts[static_cast<std::size_t>(i - 1)];
    if (cut.above != i * (2 * k + i) || cut.above_degree2 != k + 2 * i) {
      throw std::logic_error("horizontal cut " + std::to_string(i) + " does not match closed form");
    }
    profile.emplace_back(cut.above, cut.above_degree2);
  }
  return profile;
}

Count tw3_coronene_formula(unsigned k) {
  const auto K = static_cast<Count>(k);
  const Count numerator = (K - 1) * K * (2 * K - 1) * (82 * K * K - 82 * K - 19);
  return numerator / 5;
}

Count tw3_coronene_group_sum(unsigned k) {
  const auto K = static_cast<Count>(k);
  Count total = (3 * K * K - 3 * K) * (3 * K * K - 3 * K);
  for (Count i = 1; i < K; ++i) {
    total += 2 * (2 * K * i + i * i - K - 2 * i) * (6 * K * K - 6 * K - 2 * K * i - i * i + K + 2 * i);
  }
  return total;
}

}  // namespace gwi
