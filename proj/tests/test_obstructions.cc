#include "circ3/obstructions.hh"
#include "circ3/oracle.hh"
#include "support.hh"

#include <doctest.h>

#include <algorithm>

using namespace circ3;

TEST_CASE("classification of named graphs") {
  CHECK_FALSE(classify_free(cycle_graph(5)));
  CHECK_FALSE(classify_free(complete_graph(2)));
  const auto w = classify_free(cycle_graph(6));
  REQUIRE(w);
  CHECK(w->kind == Pattern::C6);
  CHECK(w->vertices.size() == 6);
  CHECK(verify_witness(cycle_graph(6), *w));
  CHECK(classify_free(complete_graph(3))->kind == Pattern::K3);
  for (Pattern p : kAllPatterns) {
    const auto hit = classify_free(pattern_graph(p));
    REQUIRE(hit);
    CHECK(hit->kind == p);
  }
}

TEST_CASE("the obstructions are minimal and point-determining") {
  for (Pattern p : kAllPatterns) {
    const Graph& g = pattern_graph(p);
    for (int drop = 0; drop < g.order(); ++drop) {
      VertexSet keep;
      for (int v = 0; v < g.order(); ++v)
        if (v != drop) keep.push_back(v);
      CHECK(is_free(g.induced(keep)));
    }
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) CHECK(g.neighbours(u) != g.neighbours(v));
  }
}

TEST_CASE("Petersen graph minus a vertex") {
  const Graph& h = petersen_minus_vertex();
  CHECK(h.order() == 9);
  CHECK(h.edge_count() == 12);
  std::vector<int> deg;
  for (int v = 0; v < 9; ++v) deg.push_back(h.degree(v));
  CHECK(std::ranges::count(deg, 3) == 6);
  CHECK(std::ranges::count(deg, 2) == 3);
  CHECK(has_subgraph_h10_minus_v(petersen_graph()));
  CHECK_FALSE(has_subgraph_h10_minus_v(complete_graph(8)));
  CHECK_FALSE(has_subgraph_h10_minus_v(cycle_graph(9)));
  CHECK(oracle::subgraph_h10_minus_v(petersen_graph()));
  CHECK_FALSE(oracle::subgraph_h10_minus_v(cycle_graph(9)));
}

TEST_CASE("maximal triangle-free") {
  CHECK(is_maximal_triangle_free(cycle_graph(5)));
  CHECK_FALSE(is_maximal_triangle_free(circ3::testing::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK(is_maximal_triangle_free(Graph(1)));
  CHECK_FALSE(is_maximal_triangle_free(complete_graph(3)));
}

TEST_CASE("pattern search agrees with the oracle on all graphs with 5 vertices") {
  for (int n = 0; n <= 5; ++n)
    oracle::all_graphs(n, [](const Graph& g) {
      for (Pattern p : kAllPatterns) CHECK(find_pattern(g, p).has_value() == oracle::induced(g, p));
    });
}

TEST_CASE("heredity of the free class") {
  oracle::all_graphs(6, [](const Graph& g) {
    if (!is_free(g)) return;
    for (int drop = 0; drop < 6; ++drop) {
      VertexSet keep;
      for (int v = 0; v < 6; ++v)
        if (v != drop) keep.push_back(v);
      if (!is_free(g.induced(keep))) FAIL("free graph with non-free induced subgraph");
    }
  });
}
