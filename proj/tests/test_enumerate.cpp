#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gwi/enumerate.hpp"
#include "gwi/extremal.hpp"
#include "gwi/generators.hpp"
#include "test_support.hpp"

using namespace gwi;

namespace {

Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace

TEST_CASE("free tree counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(all_free_trees(n).size() == expected[n - 1]);
  std::size_t count = 0;
  for_each_free_tree(14, [&](const Graph&) { ++count; });
  CHECK(count == 3159);
}

TEST_CASE("small orders") {
  const auto four = all_free_trees(4);
  REQUIRE(four.size() == 2);
  std::set<std::string> forms{canonical_form(four[0]), canonical_form(four[1])};
  CHECK(forms == std::set<std::string>{canonical_form(path_graph(4)), canonical_form(star_graph(4))});
  CHECK(all_free_trees(1).front().order() == 1);
}

TEST_CASE("enumerator order bounds") {
  try {
    FreeTreeGenerator gen(kMaxEnumerationOrder + 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
  CHECK_THROWS_AS(FreeTreeGenerator(0), Error);
  CHECK_THROWS_AS(verify_extremal(17, claim::WienerBounds{}), Error);
}

TEST_CASE("enumeration matches Prüfer enumeration with canonical dedup") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::string> generated;
    for_each_free_tree(n, [&](const Graph& t) { generated.insert(canonical_form(t)); });
    CHECK(generated == testing::pruefer_isomorphism_classes(n));
  }
}

TEST_CASE("yielded trees are trees and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 10; ++n) {
    std::set<std::string> forms;
    std::size_t count = 0;
    for_each_free_tree(n, [&](const Graph& t) {
      CHECK(is_tree(t));
      CHECK(t.order() == n);
      forms.insert(canonical_form(t));
      ++count;
    });
    CHECK(forms.size() == count);
  }
}

TEST_CASE("enumeration order is deterministic") {
  const auto a = all_free_trees(9);
  const auto b = all_free_trees(9);
  CHECK(a == b);
}

TEST_CASE("canonical form is a relabeling invariant") {
  auto rng = testing::seeded(79);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph t = random_tree(testing::uniform_size(rng, 1, 40), rng);
    CHECK(canonical_form(t) == canonical_form(relabel(t, rng)));
  }
  CHECK(canonical_form(path_graph(5)) != canonical_form(star_graph(5)));
  CHECK_THROWS_AS(canonical_form(cycle_graph(4)), Error);
}

TEST_CASE("verify_extremal examples") {
  const auto tw3 = verify_extremal(8, claim::MaxTw3{});
  CHECK(tw3.passed());
  CHECK(tw3.trees_scanned == 23);
  CHECK(tw3.observed_max == 4);
  CHECK(tw3.predicted_max == 4);
  CHECK(tw3.unique_maximizer);
  CHECK(tw3.maximizers.front() == canonical_form(gen(family::Caterpillar{8, 3, 3})));

  const auto w3 = verify_extremal(10, claim::MaxWk{3});
  CHECK(w3.passed());
  CHECK(w3.trees_scanned == 106);
  CHECK(w3.observed_max == 16);

  const auto bounds = verify_extremal(6, claim::WienerBounds{});
  CHECK(bounds.passed());
  CHECK(*bounds.observed_min == 25);
  CHECK(bounds.observed_max == 35);
  CHECK(bounds.minimizers.size() == 1);
  CHECK(bounds.unique_maximizer);

  CHECK(verify_extremal(12, claim::MaxWk{5}).observed_max == 16);
  CHECK(verify_extremal(12, claim::MaxDegreeCount{3}).observed_max == 5);
}

TEST_CASE("TW_3 maximizer is not unique at n = 5") {
  const auto r = verify_extremal(5, claim::MaxTw3{});
  CHECK(r.observed_max == 0);
  CHECK(r.predicted_max == 0);
  CHECK(r.maximizers.size() == 3);
  CHECK_FALSE(r.passed());
}

TEST_CASE("verify_extremal rejects claims without a prediction") {
  CHECK_THROWS_AS(verify_extremal(4, claim::MaxTw3{}), Error);
  CHECK_THROWS_AS(verify_extremal(6, claim::MaxWk{2}), Error);
  CHECK_THROWS_AS(verify_extremal(5, claim::MaxWk{7}), Error);
}
