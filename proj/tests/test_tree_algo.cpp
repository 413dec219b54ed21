#include <doctest.h>

#include "gwi/distance.hpp"
#include "gwi/extremal.hpp"
#include "gwi/generators.hpp"
#include "gwi/oracle.hpp"
#include "gwi/tree_algo.hpp"
#include "test_support.hpp"

using namespace gwi;

namespace {

std::vector<Count> row_of(const DistTable& a, Vertex v) {
  std::vector<Count> out;
  for (unsigned i = 0; i <= a.k(); ++i) out.push_back(a(v, i));
  return out;
}

// Table entry by definition: descendants of v (v on their root path) at BFS distance i.
Count subtree_count(const RootedTree& t, Vertex v, unsigned i) {
  const auto dist = bfs_distances(t.graph(), v);
  Count count = 0;
  for (Vertex x = 0; x < t.graph().order(); ++x) {
    Vertex y = x;
    while (y != v && y != kNoParent) y = t.parent(y);
    if (y == v && dist[x] == static_cast<Distance>(i)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("build_dist_table hand simulations") {
  const Graph p3 = path_graph(3);
  const RootedTree rp3(p3, 0);
  const DistTable a(rp3, 2);
  CHECK(row_of(a, 2) == std::vector<Count>{1, 0, 0});
  CHECK(row_of(a, 1) == std::vector<Count>{1, 1, 0});
  CHECK(row_of(a, 0) == std::vector<Count>{1, 1, 1});

  const Graph s4 = star_graph(4);
  const RootedTree rs4(s4, 0);
  const DistTable b(rs4, 2);
  CHECK(row_of(b, 0) == std::vector<Count>{1, 3, 0});
  for (Vertex leaf = 1; leaf < 4; ++leaf) CHECK(row_of(b, leaf) == std::vector<Count>{1, 0, 0});

  const Graph single(1, {});
  const RootedTree rs(single, 0);
  CHECK(row_of(DistTable(rs, 4), 0) == std::vector<Count>{1, 0, 0, 0, 0});
}

TEST_CASE("DistTable matches subtree counts by definition") {
  auto rng = testing::seeded(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph t = random_tree(testing::uniform_size(rng, 1, 30), rng);
    const auto root = static_cast<Vertex>(testing::uniform_size(rng, 0, t.order() - 1));
    const RootedTree rooted(t, root);
    const unsigned k = static_cast<unsigned>(testing::uniform_size(rng, 1, 6));
    const DistTable a(rooted, k);
    for (Vertex v = 0; v < t.order(); ++v) {
      CHECK(a(v, 0) == 1);
      if (v != root) CHECK(a(v, 1) == static_cast<Count>(t.degree(v)) - 1);
      for (unsigned i = 0; i <= k; ++i) CHECK(a(v, i) == subtree_count(rooted, v, i));
    }
  }
}

TEST_CASE("rooted tree requires a tree") {
  const Graph c4 = cycle_graph(4);
  try {
    RootedTree r(c4, 0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotATree);
  }
  CHECK_THROWS_AS(gwp_linear(c4, 2), Error);
  CHECK_THROWS_AS(wp3_zagreb(c4), Error);
}

TEST_CASE("gwp_linear examples") {
  CHECK(gwp_linear(path_graph(5), 3) == 2);
  CHECK(gwp_linear(star_graph(6), 2) == 10);
  CHECK(gwp_linear(Graph(1, {}), 3) == 0);
  CHECK(gwp_linear(path_graph(2), 1) == 1);
  CHECK(gwp_linear(path_graph(2), 5) == 0);
}

TEST_CASE("gwp_linear equals the oracle on random trees") {
  auto rng = testing::seeded(47);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph t = random_tree(trial < 20 ? 50 : testing::uniform_size(rng, 2, 120), rng);
    const auto poly = wiener_polynomial(t);
    for (unsigned k = 1; k <= 10; ++k) CHECK(gwp_linear(t, k) == poly.at(k));
  }
}

TEST_CASE("gwp_linear does not depend on the root") {
  auto rng = testing::seeded(53);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph t = random_tree(testing::uniform_size(rng, 2, 80), rng);
    const auto r1 = static_cast<Vertex>(testing::uniform_size(rng, 0, t.order() - 1));
    const auto r2 = static_cast<Vertex>(testing::uniform_size(rng, 0, t.order() - 1));
    for (unsigned k = 1; k <= 8; ++k) {
      CHECK(gwp_linear(RootedTree(t, r1), k) == gwp_linear(RootedTree(t, r2), k));
    }
  }
}

TEST_CASE("every pair is counted twice before halving") {
  auto rng = testing::seeded(59);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph t = random_tree(testing::uniform_size(rng, 2, 80), rng);
    const RootedTree r(t, 0);
    for (unsigned k = 1; k <= 8; ++k) {
      const Count twice = gwp_ordered_pairs(r, DistTable(r, k));
      CHECK(twice % 2 == 0);
      CHECK(twice / 2 == gwp_linear(r, k));
    }
  }
}

TEST_CASE("edge and cherry identities") {
  auto rng = testing::seeded(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph t = random_tree(testing::uniform_size(rng, 2, 100), rng);
    const auto m = static_cast<Count>(t.order() - 1);
    CHECK(gwp_linear(t, 1) == m);
    CHECK(gwp_linear(t, 2) == zagreb_m1(t) / 2 - m);
    CHECK(gwp_linear(t, 3) == wp3_zagreb(t));
  }
}

TEST_CASE("wp3_zagreb") {
  CHECK(wp3_zagreb(path_graph(5)) == 2);
  CHECK(wp3_zagreb(star_graph(6)) == 0);
  const Graph broom = gen(family::DoubleBroom{3, 4, 4});
  REQUIRE(broom.order() == 10);
  CHECK(wp3_zagreb(broom) == 16);
  CHECK(wk(broom, 3) == 16);
}

TEST_CASE("long paths run without recursion") {
  const std::size_t n = 200000;
  const Graph p = path_graph(n);
  CHECK(gwp_linear(p, 5) == static_cast<Count>(n - 5));
  CHECK(gwp_linear(RootedTree(p, static_cast<Vertex>(n / 2)), 7) == static_cast<Count>(n - 7));
}
