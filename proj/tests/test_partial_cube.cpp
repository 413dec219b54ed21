#include <doctest.h>

#include <set>

#include "gwi/distance.hpp"
#include "gwi/generators.hpp"
#include "gwi/oracle.hpp"
#include "gwi/partial_cube.hpp"
#include "test_support.hpp"

using namespace gwi;

namespace {

void check_isometric(const Graph& g, const CubeCoordinates& c) {
  const auto fw = testing::floyd_warshall(g);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) CHECK(hamming_distance(c, u, v) == fw[u][v]);
}

std::set<unsigned> degrees_of(const Graph& g) {
  std::set<unsigned> out;
  for (Vertex v = 0; v < g.order(); ++v) out.insert(static_cast<unsigned>(g.degree(v)));
  return out;
}

}  // namespace

TEST_CASE("theta_classes on K_2 and trees") {
  const auto k2 = theta_classes(path_graph(2));
  REQUIRE(k2.size() == 1);
  CHECK(k2.classes[0].edges == std::vector<Edge>{{0, 1}});
  CHECK(k2.classes[0].side0 == std::vector<Vertex>{0});
  CHECK(k2.classes[0].side1 == std::vector<Vertex>{1});

  const auto p4 = theta_classes(path_graph(4));
  REQUIRE(p4.size() == 3);
  CHECK(p4.classes[1].edges == std::vector<Edge>{{1, 2}});
  CHECK(p4.classes[1].side0 == std::vector<Vertex>{0, 1});
  CHECK(p4.classes[1].side1 == std::vector<Vertex>{2, 3});

  auto rng = testing::seeded(67);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph t = random_tree(testing::uniform_size(rng, 2, 60), rng);
    const auto p = theta_classes(t);
    CHECK(p.size() == t.order() - 1);
    for (const auto& cls : p.classes) {
      CHECK(cls.edges.size() == 1);
      CHECK(cls.side0.size() + cls.side1.size() == t.order());
      CHECK(cls.side0.front() == 0);
    }
  }
}

TEST_CASE("theta_classes on C_6 pairs opposite edges") {
  const auto p = theta_classes(cycle_graph(6));
  REQUIRE(p.size() == 3);
  CHECK(p.classes[0].edges == std::vector<Edge>{{0, 1}, {3, 4}});
  CHECK(p.classes[1].edges == std::vector<Edge>{{0, 5}, {2, 3}});
  CHECK(p.classes[2].edges == std::vector<Edge>{{1, 2}, {4, 5}});
  for (const auto& cls : p.classes) {
    CHECK(cls.side0.size() == 3);
    CHECK(cls.side1.size() == 3);
  }
}

TEST_CASE("theta_classes preconditions") {
  try {
    theta_classes(cycle_graph(5));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBipartite);
  }
  try {
    theta_classes(complete_bipartite_graph(2, 3));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClassRemovalNotTwoComponents);
  }
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  try {
    theta_classes(Graph(4, two));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}

TEST_CASE("is_partial_cube verdicts") {
  const auto p4 = is_partial_cube(path_graph(4));
  REQUIRE(p4.accepted);
  CHECK(p4.coordinates->cols() == 3);
  check_isometric(path_graph(4), *p4.coordinates);

  const auto c5 = is_partial_cube(cycle_graph(5));
  CHECK_FALSE(c5.accepted);
  CHECK(*c5.reason == CubeRejection::NotBipartite);

  const auto k23 = is_partial_cube(complete_bipartite_graph(2, 3));
  CHECK_FALSE(k23.accepted);
  CHECK(*k23.reason == CubeRejection::ClassRemovalNotTwoComponents);
  CHECK_FALSE(k23.detail.empty());

  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK(*is_partial_cube(Graph(4, two)).reason == CubeRejection::Disconnected);

  // Bipartite but not a partial cube: K_{2,3} with a pendant, and K_{3,3}.
  CHECK_FALSE(is_partial_cube(complete_bipartite_graph(3, 3)).accepted);
  CHECK_FALSE(is_partial_cube(attach_pendant_paths(complete_bipartite_graph(2, 3), 0, 2, 0)).accepted);
}

TEST_CASE("coordinates are isometric on accepted graphs") {
  for (const Graph& g : {cycle_graph(8), cycle_graph(14), hypercube_graph(4), path_graph(7)}) {
    const auto verdict = is_partial_cube(g);
    REQUIRE(verdict.accepted);
    check_isometric(g, *verdict.coordinates);
  }
}

TEST_CASE("halfspace_degree_counts") {
  const Graph k2 = path_graph(2);
  CHECK(halfspace_degree_counts(k2, theta_classes(k2), 1) ==
        std::vector<std::pair<Count, Count>>{{1, 1}});
  const Graph p4 = path_graph(4);
  CHECK(halfspace_degree_counts(p4, theta_classes(p4), 1) ==
        std::vector<std::pair<Count, Count>>{{1, 1}, {1, 1}, {1, 1}});
  const Graph c6 = cycle_graph(6);
  CHECK(halfspace_degree_counts(c6, theta_classes(c6), 2) ==
        std::vector<std::pair<Count, Count>>(3, {3, 3}));
}

TEST_CASE("twk_cut examples") {
  CHECK(twk_cut(cycle_graph(6), 2) == 27);
  CHECK(twk_cut(hypercube_graph(3), 3) == 48);
  CHECK(wiener(hypercube_graph(3)) == 48);
  CHECK(twk_cut(path_graph(5), 1) == 4);
  try {
    twk_cut(cycle_graph(5), 2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPartialCube);
  }
  CHECK_THROWS_AS(twk_cut(complete_bipartite_graph(2, 3), 2), Error);
}

TEST_CASE("twk_cut equals the oracle on random trees for every present degree") {
  auto rng = testing::seeded(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph t = random_tree(testing::uniform_size(rng, 2, 200), rng);
    const auto verdict = is_partial_cube(t);
    REQUIRE(verdict.accepted);
    for (unsigned k : degrees_of(t)) CHECK(twk_cut(t, *verdict.partition, k) == twk(t, k));
  }
}

TEST_CASE("even cycles and hypercubes") {
  for (std::size_t half = 2; half <= 20; ++half) {
    const Graph c = cycle_graph(2 * half);
    const auto h = static_cast<Count>(half);
    CHECK(theta_classes(c).size() == half);
    CHECK(twk_cut(c, 2) == h * h * h);
    CHECK(twk(c, 2) == h * h * h);
  }
  for (unsigned d = 1; d <= 6; ++d) {
    const Graph q = hypercube_graph(d);
    const Count expected = static_cast<Count>(d) << (2 * (d - 1));
    CHECK(theta_classes(q).size() == d);
    CHECK(twk_cut(q, d) == expected);
    CHECK(wiener(q) == expected);
  }
}
