#include "circ3/error.hh"
#include "circ3/oracle.hh"
#include "circ3/representation.hh"
#include "support.hh"

#include <doctest.h>

using namespace circ3;
using circ3::testing::fr;
using circ3::testing::from_edges;

TEST_CASE("circular cliques") {
  CHECK(circular_clique(7, 1) == complete_graph(7));
  CHECK(isomorphic(circular_clique(7, 3), cycle_graph(7)));
  CHECK(isomorphic(circular_clique(5, 2), cycle_graph(5)));
  CHECK_THROWS_AS(circular_clique(6, 2), InputError);
  CHECK_THROWS_AS(circular_clique(3, 2), InputError);
}

TEST_CASE("full homomorphisms") {
  auto h = full_hom_search(cycle_graph(5), 2);
  REQUIRE(h);
  CHECK(verify_full_hom(cycle_graph(5), *h));

  h = full_hom_search(complete_bipartite(3, 3), 1);
  REQUIRE(h);
  CHECK(h->map == std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(verify_full_hom(complete_bipartite(3, 3), *h));

  for (int k = 1; k <= 4; ++k) CHECK_FALSE(full_hom_search(complete_graph(3), k));
  // A homomorphism that is not full.
  CHECK_FALSE(verify_full_hom(path_graph(3), FullHom{2, {0, 2, 3}}));
}

TEST_CASE("circle representations") {
  auto r = find_circle_representation(cycle_graph(6));
  CHECK(r.outcome == RepresentationOutcome::Obstructed);
  REQUIRE(r.obstruction);
  CHECK(r.obstruction->kind == Pattern::C6);

  r = find_circle_representation(complete_graph(2));
  REQUIRE(r.outcome == RepresentationOutcome::Represented);
  CHECK(r.rep.points == std::vector<Fraction>{fr(0, 1), fr(1, 2)});

  r = find_circle_representation(cycle_graph(5));
  REQUIRE(r.outcome == RepresentationOutcome::Represented);
  CHECK(verify_representation(cycle_graph(5), r.rep));
  for (const auto& p : r.rep.points) {
    Fraction best(1);
    for (int i = 0; i < 5; ++i) best = std::min(best, circ_dist(p, fr(i, 5)));
    CHECK(best < fr(1, 30));
  }
}

TEST_CASE("representation verification") {
  CHECK(verify_representation(complete_graph(2), {{fr(0, 1), fr(1, 2)}}));
  CHECK_FALSE(verify_representation(complete_graph(2), {{fr(0, 1), fr(1, 4)}}));
  const Graph two_k2 = from_edges(4, {{0, 1}, {2, 3}});
  CHECK(verify_representation(two_k2, {{fr(0, 1), fr(2, 5), fr(1, 10), fr(7, 10)}}));
  // Vertices 0 and 3 are non-adjacent but 2/5 apart.
  CHECK_FALSE(verify_representation(two_k2, {{fr(0, 1), fr(2, 5), fr(1, 5), fr(3, 5)}}));
  CHECK_FALSE(verify_representation(two_k2, {{fr(0, 1), fr(2, 5), fr(1, 5)}}));
  CHECK_FALSE(verify_representation(empty_graph(2), {{fr(0, 1), fr(1, 3)}}));
  CHECK_FALSE(verify_representation(empty_graph(2), {{fr(0, 1), fr(0, 1)}}));
}

TEST_CASE("perturbation keeps twins apart without crossing the threshold") {
  // Many twins on a K_{8,3} image: the perturbation radius shrinks with the
  // multiplicity.
  Graph g = circular_clique(8, 3);
  for (int copy = 0; copy < 3; ++copy)
    for (int v = 0; v < 8; ++v) g.add_vertex(to_set(g.neighbours(v)));
  const auto r = find_circle_representation(g);
  REQUIRE(r.outcome == RepresentationOutcome::Represented);
  CHECK(verify_representation(g, r.rep));
}

TEST_CASE("representations exist exactly for free graphs") {
  for (int n = 0; n <= 5; ++n)
    oracle::all_graphs(n, [](const Graph& g) {
      const auto r = find_circle_representation(g);
      CHECK((r.outcome == RepresentationOutcome::Represented) == is_free(g));
      if (r.outcome == RepresentationOutcome::Represented) CHECK(verify_representation(g, r.rep));
    });
}
