#include "circ3/error.hh"
#include "circ3/json_io.hh"
#include "support.hh"

#include <doctest.h>

using namespace circ3;
using circ3::testing::fr;

TEST_CASE("representation json") {
  const auto r = find_circle_representation(cycle_graph(5));
  const Json j = to_json(r.rep, r.k);
  CHECK(j["k"] == 2);
  CHECK(j["points"]["0"] == "0/1");
  const auto back = representation_from_json(j);
  CHECK(back.points == r.rep.points);
  CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"points": {"0": "0/1", "2": "1/2"}})")), InputError);
  CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"points": {"0": "a/b"}})")), InputError);
}

TEST_CASE("arc model json") {
  const auto m = *arc_model(cycle_graph(4));
  const Json j = to_json(m);
  CHECK(j["circumference"] == 3);
  const auto back = arcs_from_json(j);
  REQUIRE(back.arcs.size() == m.arcs.size());
  for (std::size_t i = 0; i < m.arcs.size(); ++i) CHECK(back.arcs[i] == m.arcs[i]);
  CHECK_THROWS_AS(arcs_from_json(Json::parse(R"({"circumference": 2, "arcs": {}})")), InputError);
}

TEST_CASE("verdict json for every certificate type") {
  for (Route r : {Route::Hom, Route::Spanning, Route::Brandt, Route::Complement})
    for (const Graph& g : {cycle_graph(5), cycle_graph(6), complete_graph(3)}) {
      const auto v = chi_c_below_three(g, r);
      const auto back = verdict_from_json(to_json(v));
      CHECK(back.route == v.route);
      CHECK(back.below_three == v.below_three);
      CHECK(back.certificate.index() == v.certificate.index());
      CHECK(to_json(back) == to_json(v));
      CHECK(verify_certificate(g, back));
    }
}

TEST_CASE("trace json") {
  const auto r = spanning_free_extension(empty_graph(3));
  const auto back = trace_from_json(to_json(r.trace));
  CHECK(replay(empty_graph(3), back) == r.graph);
  const auto up = to_maximal_triangle_free(circ3::testing::from_edges(4, {{0, 1}, {2, 3}}));
  CHECK(trace_from_json(to_json(up.trace)).steps == up.trace.steps);
  CHECK_THROWS_AS(trace_from_json(Json::parse(R"([{"step": "teleport"}])")), InputError);
}

TEST_CASE("structure json") {
  const std::vector<Fraction> pts = {fr(0, 1), fr(1, 10), fr(1, 2), fr(3, 5)};
  const auto a = ebs_from_points(pts);
  CHECK(ebs_from_json(to_json(a)) == a);

  const auto one_way = ebs_from_json(Json::parse(R"({"n": 2, "E": [[0, 1]]})"));
  CHECK(one_way.E(1, 0));
  const auto loop = ebs_from_json(Json::parse(R"({"n": 1, "E": [[0, 0]]})"));
  CHECK_FALSE(check_universal_axioms(loop).ok());
  CHECK_THROWS_AS(ebs_from_json(Json::parse(R"({"n": 2, "B": [[0, 1]]})")), InputError);
  CHECK_THROWS_AS(ebs_from_json(Json::parse(R"({"n": 2, "E": [[0, 5]]})")), InputError);
}

TEST_CASE("graph and obstruction json") {
  const Graph g = petersen_graph();
  CHECK(graph_from_json(to_json(g)) == g);
  const auto w = *classify_free(cycle_graph(6));
  CHECK(obstruction_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[1, 1]]})")), InputError);
}
