#include <doctest.h>

#include <numeric>

#include "gwi/benzenoid.hpp"
#include "gwi/generators.hpp"
#include "gwi/oracle.hpp"
#include "gwi/partial_cube.hpp"

using namespace gwi;

namespace {

std::size_t count_degree(const Graph& g, std::size_t deg) {
  std::size_t c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == deg;
  return c;
}

}  // namespace

TEST_CASE("gen_coronene basic shapes") {
  const auto h1 = gen_coronene(1);
  CHECK(h1.graph.order() == 6);
  CHECK(count_degree(h1.graph, 2) == 6);
  CHECK(twk(h1.graph, 2) == wiener(cycle_graph(6)));

  const auto h2 = gen_coronene(2);
  CHECK(h2.graph.order() == 24);
  CHECK(count_degree(h2.graph, 2) == 12);
  CHECK(count_degree(h2.graph, 3) == 12);

  const auto h3 = gen_coronene(3);
  CHECK(h3.graph.order() == 54);
  CHECK(count_degree(h3.graph, 2) == 18);
}

TEST_CASE("coronene invariants for k <= 6") {
  for (unsigned k = 1; k <= 6; ++k) {
    const auto h = gen_coronene(k);
    const auto K = static_cast<std::size_t>(k);
    CHECK(h.graph.order() == 6 * K * K);
    CHECK(count_degree(h.graph, 2) == 6 * K);
    CHECK(count_degree(h.graph, 2) + count_degree(h.graph, 3) == h.graph.order());
    CHECK(is_bipartite(h.graph));
    CHECK(is_connected(h.graph));
    CHECK(h.coords.size() == h.graph.order());
    for (std::size_t v = 1; v < h.coords.size(); ++v) {
      const auto& a = h.coords[v - 1];
      const auto& b = h.coords[v];
      CHECK((a.y < b.y || (a.y == b.y && a.x < b.x)));
    }
  }
}

TEST_CASE("coronenes are partial cubes with three orientation groups") {
  for (unsigned k = 1; k <= 4; ++k) {
    const auto h = gen_coronene(k);
    const auto verdict = is_partial_cube(h.graph);
    REQUIRE(verdict.accepted);
    const auto sizes = orientation_group_sizes(h, *verdict.partition);
    for (std::size_t s : sizes) CHECK(s == 2 * k - 1);
    CHECK(verdict.partition->size() == 3 * (2 * k - 1));
  }
}

TEST_CASE("horizontal_cut_profile") {
  using Profile = std::vector<std::pair<Count, Count>>;
  CHECK(horizontal_cut_profile(gen_coronene(1)) == Profile{{3, 3}});
  const auto p2 = horizontal_cut_profile(gen_coronene(2));
  CHECK(p2.front() == std::pair<Count, Count>{5, 4});
  const auto p3 = horizontal_cut_profile(gen_coronene(3));
  REQUIRE(p3.size() == 3);
  CHECK(p3[2] == std::pair<Count, Count>{27, 9});
  for (unsigned k = 1; k <= 8; ++k) CHECK(horizontal_cut_profile(gen_coronene(k)).size() == k);
}

TEST_CASE("mirror symmetry of horizontal cut contributions") {
  for (unsigned k = 2; k <= 6; ++k) {
    const auto cuts = horizontal_cuts(gen_coronene(k));
    REQUIRE(cuts.size() == 2 * k - 1);
    for (std::size_t i = 1; i < k; ++i) {
      const auto& a = cuts[i - 1];
      const auto& b = cuts[2 * k - i - 1];
      CHECK(a.above_degree3 * a.below_degree3 == b.above_degree3 * b.below_degree3);
    }
  }
}

TEST_CASE("one orientation group contributes a third of TW_3") {
  for (unsigned k = 1; k <= 6; ++k) {
    const auto h = gen_coronene(k);
    const auto cuts = horizontal_cuts(h);
    const Count group = std::accumulate(cuts.begin(), cuts.end(), Count{0}, [](Count acc, const HorizontalCut& c) {
      return acc + c.above_degree3 * c.below_degree3;
    });
    CHECK(group == tw3_coronene_group_sum(k));
    CHECK(3 * group == tw3_coronene_formula(k));
  }
}

TEST_CASE("tw3_coronene_formula") {
  CHECK(tw3_coronene_formula(1) == 0);
  CHECK(tw3_coronene_formula(2) == 174);
  CHECK(tw3_coronene_formula(3) == 2838);
  CHECK(twk(gen_coronene(2).graph, 3) == 174);
  CHECK(twk(gen_coronene(3).graph, 3) == 2838);
  for (unsigned k = 1; k <= 30; ++k) {
    const auto K = static_cast<Count>(k);
    CHECK((K - 1) * K * (2 * K - 1) * (82 * K * K - 82 * K - 19) % 5 == 0);
  }
}

TEST_CASE("closed formula, cut method and oracle agree for k <= 5") {
  for (unsigned k = 1; k <= 5; ++k) {
    const auto h = gen_coronene(k);
    const Count formula = tw3_coronene_formula(k);
    CHECK(twk_cut(h.graph, 3) == formula);
    CHECK(twk(h.graph, 3) == formula);
  }
}
