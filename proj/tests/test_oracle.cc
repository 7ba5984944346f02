#include "circ3/error.hh"
#include "circ3/obstructions.hh"
#include "circ3/oracle.hh"
#include "circ3/representation.hh"
#include "support.hh"

#include <doctest.h>

using namespace circ3;
using circ3::testing::fr;

TEST_CASE("induced subgraph oracle") {
  CHECK(oracle::induced(cycle_graph(6), cycle_graph(6)));
  CHECK_FALSE(oracle::induced(complete_bipartite(3, 3), cycle_graph(6)));
  CHECK(oracle::induced(disjoint_union(Graph(1), cycle_graph(5)), cycle_graph(5)));
}

// These are the values frozen in test_chromatic.cc.
TEST_CASE("circular chromatic number oracle") {
  CHECK(oracle::chi_c(complete_graph(2)) == fr(2, 1));
  CHECK(oracle::chi_c(cycle_graph(5)) == fr(5, 2));
  CHECK(oracle::chi_c(cycle_graph(6)) == fr(2, 1));
  CHECK(oracle::chi_c(cycle_graph(7)) == fr(7, 3));
  CHECK(oracle::chi_c(complete_graph(3)) == fr(3, 1));
  CHECK(oracle::chi_c(petersen_graph()) == fr(3, 1));
  CHECK_THROWS_AS(oracle::chi_c(empty_graph(2)), InputError);
}

TEST_CASE("spanning supergraph oracle") {
  CHECK(oracle::spanning_free(cycle_graph(6)));
  CHECK_FALSE(oracle::spanning_free(complete_graph(3)));
  CHECK(oracle::spanning_free(Graph(1)));
  CHECK_THROWS_AS(oracle::spanning_free(Graph(9)), InputError);
}

TEST_CASE("graph enumeration") {
  int count = 0;
  oracle::all_graphs(1, [&](const Graph&) { ++count; });
  CHECK(count == 1);
  count = 0;
  oracle::all_graphs(3, [&](const Graph&) { ++count; });
  CHECK(count == 8);
  CHECK(oracle::graph_count(5) == 1024);
  CHECK(oracle::graph_from_code(3, 1) == circ3::testing::from_edges(3, {{0, 1}}));
  CHECK(oracle::graph_from_code(3, 4) == circ3::testing::from_edges(3, {{1, 2}}));
  CHECK_THROWS_AS(oracle::graph_count(8), InputError);
}

// Number of labeled free graphs per vertex count, computed here from the
// induced-subgraph oracle alone.
TEST_CASE("free graph counts") {
  const std::vector<int> frozen = {1, 1, 2, 7, 41, 373, 4517};
  for (int n = 0; n <= 6; ++n) {
    int free = 0;
    oracle::all_graphs(n, [&](const Graph& g) {
      bool hit = false;
      for (Pattern p : kAllPatterns) hit = hit || oracle::induced(g, p);
      free += !hit;
    });
    CHECK(free == frozen[n]);
  }
}

TEST_CASE("spanning oracle agrees with the chi_c oracle") {
  for (int n = 1; n <= 5; ++n)
    oracle::all_graphs(n, [](const Graph& g) {
      CHECK(oracle::spanning_free(g) == (g.edge_count() == 0 || oracle::chi_c(g) < Fraction(3)));
    });
}
