#include <catch2/catch_amalgamated.hpp>

#include "antimatch/generators.hpp"
#include "antimatch/oracle.hpp"
#include "support.hpp"

using namespace antimatch;

TEST_CASE("line_graph_square encodes the neighbourly relation") {
  const Graph single = fixture("path(2)");
  const EdgeIndexedGraph l1 = line_graph_square(single);
  CHECK(l1.edge_vertices.size() == 1);

  // every pair of P4 edges is neighbourly
  const EdgeIndexedGraph l3 = line_graph_square(fixture("path(4)"));
  REQUIRE(l3.edge_vertices.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(l3.test(i, j) == (i != j));

  // P5: the end edges form the unique non-adjacent pair
  const EdgeIndexedGraph l4 = line_graph_square(fixture("path(5)"));
  REQUIRE(l4.edge_vertices.size() == 4);
  int adjacencies = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      CHECK(l4.test(i, j) == l4.test(j, i));
      if (l4.test(i, j)) ++adjacencies;
    }
  CHECK(adjacencies == 5);
  CHECK_FALSE(l4.test(0, 3));  // edges (0,1) and (3,4)
  for (int i = 0; i < 4; ++i) CHECK_FALSE(l4.test(i, i));
}

TEST_CASE("oracle_max_neighbourly on fixed graphs") {
  CHECK(oracle_max_neighbourly(fixture("path(5)")).cardinality == 3);
  CHECK(oracle_max_neighbourly(fixture("pentagon")).cardinality == 5);
  const Witness empty = oracle_max_neighbourly(fixture("path(1)"));
  CHECK(empty.cardinality == 0);
  CHECK(std::holds_alternative<EmptyKind>(empty.kind));

  const Witness w = oracle_max_neighbourly(fixture("three_spoke"));
  CHECK(w.cardinality == 6);
  CHECK(std::holds_alternative<OracleKind>(w.kind));
  CHECK(oracle_max_neighbourly(fixture("two_spoke_leaf")).cardinality == 5);
}

TEST_CASE("oracle_max_special on fixed graphs") {
  CHECK(oracle_max_special(fixture("pentagon")).cardinality == 5);
  CHECK(oracle_max_special(fixture("path(5)")).cardinality == 3);
  const Graph k3 = support::graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(oracle_max_special(k3).cardinality == 3);
}

TEST_CASE("oracles enforce their size limits") {
  CHECK_THROWS_AS(oracle_max_neighbourly(fixture("star(65)")),
                  OracleLimitError);
  CHECK_NOTHROW(oracle_max_neighbourly(fixture("star(64)")));
  CHECK_THROWS_AS(oracle_max_special(fixture("star(21)")), OracleLimitError);
  CHECK_NOTHROW(oracle_max_special(fixture("star(20)")));
}

TEST_CASE("oracles agree with plain all-subsets maxima") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 400 && checked < 150; ++seed) {
    const Graph g = support::corpus_graph(seed).graph;
    if (g.edge_count() > 12) continue;
    ++checked;
    CHECK(oracle_max_neighbourly(g).cardinality ==
          support::subsets_max(g, false));
    CHECK(oracle_max_special(g).cardinality == support::subsets_max(g, true));
  }
  CHECK(checked == 150);
}

TEST_CASE("oracle witnesses are sound and ordered") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = support::corpus_graph(seed).graph;
    const Witness general = oracle_max_neighbourly(g);
    const Witness special = oracle_max_special(g);
    CHECK(verify_neighbourly(g, general.edges, false));
    CHECK(verify_neighbourly(g, special.edges, true));
    CHECK(general.cardinality >= special.cardinality);
    CHECK(general.cardinality == static_cast<int>(general.edges.size()));
  }
}

TEST_CASE("oracle results are deterministic") {
  const Graph g = support::corpus_graph(11).graph;
  const Witness a = oracle_max_neighbourly(g);
  const Witness b = oracle_max_neighbourly(g);
  CHECK(a.edges == b.edges);
  CHECK(oracle_max_special(g).edges == oracle_max_special(g).edges);
}
