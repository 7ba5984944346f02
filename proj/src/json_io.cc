#include "circ3/json_io.hh"

#include "circ3/error.hh"

namespace circ3 {

namespace {

// Runs a reader and turns json library exceptions into InputError.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

int index_in(const Json& j, int n) {
  const int v = j.get<int>();
  if (v < 0 || v >= n) throw InputError("index " + std::to_string(v) + " out of range");
  return v;
}

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

// {"0": x, "1": y, ..} with exactly the keys 0..n-1.
template <typename T, typename F>
std::vector<T> indexed(const Json& obj, F&& read) {
  if (!obj.is_object()) throw InputError("expected an object keyed by vertex");
  std::vector<std::optional<T>> slots(obj.size());
  for (const auto& [key, value] : obj.items()) {
    std::size_t pos = 0;
    int i = -1;
    try {
      i = std::stoi(key, &pos);
    } catch (const std::exception&) {
    }
    if (pos != key.size() || i < 0 || i >= static_cast<int>(slots.size()) || slots[i])
      throw InputError("bad vertex key '" + key + "'");
    slots[i] = read(value);
  }
  std::vector<T> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Fraction frac(const Json& j) { return Fraction::parse(j.get<std::string>()); }

Json clique_json(CircularClique c) { return {{"p", c.p}, {"q", c.q}}; }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0) throw InputError("negative vertex count");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      const int u = index_in(e.at(0), n), v = index_in(e.at(1), n);
      if (u == v) throw InputError("loop edge");
      g.add_edge(u, v);
    }
    return g;
  });
}

Json to_json(const ObstructionWitness& w) {
  return {{"kind", std::string(pattern_name(w.kind))}, {"vertices", w.vertices}};
}

ObstructionWitness obstruction_from_json(const Json& j) {
  return guarded("obstruction", [&] {
    auto kind = parse_pattern(j.at("kind").get<std::string>());
    if (!kind) throw InputError("unknown pattern " + j.at("kind").dump());
    return ObstructionWitness{*kind, ints(j.at("vertices"))};
  });
}

Json to_json(const CircleRepresentation& r, int k) {
  Json pts = Json::object();
  for (std::size_t i = 0; i < r.points.size(); ++i) pts[std::to_string(i)] = r.points[i].to_string();
  return {{"points", pts}, {"k", k}};
}

CircleRepresentation representation_from_json(const Json& j) {
  return guarded("representation", [&] {
    return CircleRepresentation{indexed<Fraction>(j.at("points"), frac)};
  });
}

Json to_json(const ArcModel& m) {
  Json arcs = Json::object();
  for (std::size_t i = 0; i < m.arcs.size(); ++i)
    arcs[std::to_string(i)] = {m.arcs[i].start.to_string(), m.arcs[i].end.to_string()};
  return {{"circumference", ArcModel::circumference}, {"arcs", arcs}};
}

ArcModel arcs_from_json(const Json& j) {
  return guarded("arc model", [&] {
    if (j.at("circumference").get<int>() != ArcModel::circumference) throw InputError("circumference must be 3");
    ArcModel m;
    m.arcs = indexed<Arc>(j.at("arcs"), [](const Json& a) {
      if (a.size() != 2) throw InputError("an arc has two endpoints");
      return Arc{frac(a.at(0)), frac(a.at(1))};
    });
    return m;
  });
}

Json to_json(const ChiCVerdict& v) {
  Json cert = std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, HomCertificate>)
          return {{"type", "hom"}, {"target", clique_json(c.target)}, {"map", c.map}};
        else if constexpr (std::is_same_v<T, FreeSpanningSupergraph>)
          return {{"type", "spanning"}, {"graph", to_json(c.graph)}};
        else if constexpr (std::is_same_v<T, BrandtSupergraph>)
          return {{"type", "brandt"}, {"graph", to_json(c.graph)}};
        else if constexpr (std::is_same_v<T, ComplementArcSubgraph>)
          return {{"type", "complement"}, {"graph", to_json(c.graph)}, {"model", to_json(c.model)}};
        else
          return {{"type", "refutation"}, {"descriptor", c.descriptor}};
      },
      v.certificate);
  return {{"route", std::string(route_name(v.route))}, {"below_three", v.below_three}, {"certificate", cert}};
}

ChiCVerdict verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    auto route = parse_route(j.at("route").get<std::string>());
    if (!route) throw InputError("unknown route");
    ChiCVerdict v{*route, j.at("below_three").get<bool>(), Refutation{}};
    const Json& c = j.at("certificate");
    const auto type = c.at("type").get<std::string>();
    if (type == "hom")
      v.certificate = HomCertificate{{c.at("target").at("p").get<int>(), c.at("target").at("q").get<int>()},
                                     ints(c.at("map"))};
    else if (type == "spanning")
      v.certificate = FreeSpanningSupergraph{graph_from_json(c.at("graph"))};
    else if (type == "brandt")
      v.certificate = BrandtSupergraph{graph_from_json(c.at("graph"))};
    else if (type == "complement")
      v.certificate = ComplementArcSubgraph{graph_from_json(c.at("graph")), arcs_from_json(c.at("model"))};
    else if (type == "refutation")
      v.certificate = Refutation{c.at("descriptor").get<std::string>()};
    else
      throw InputError("unknown certificate type " + type);
    return v;
  });
}

Json to_json(const ExtensionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back(std::visit(
        [](const auto& e) -> Json {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, AddVertex>)
            return {{"step", "add_vertex"}, {"vertex", e.vertex}, {"independent_set", e.independent_set}};
          else if constexpr (std::is_same_v<T, AddEdge>)
            return {{"step", "add_edge"}, {"u", e.u}, {"v", e.v}};
          else if constexpr (std::is_same_v<T, RemoveDominatedVertex>)
            return {{"step", "remove_dominated"}, {"vertex", e.vertex}, {"dominator", e.dominator}};
          else
            return {{"step", "reinsert_twin"}, {"vertex", e.vertex}, {"twin", e.twin}};
        },
        s));
  return steps;
}

ExtensionTrace trace_from_json(const Json& j) {
  return guarded("trace", [&] {
    ExtensionTrace t;
    for (const auto& s : j) {
      const auto kind = s.at("step").get<std::string>();
      if (kind == "add_vertex")
        t.steps.push_back(AddVertex{s.at("vertex").get<int>(), ints(s.at("independent_set"))});
      else if (kind == "add_edge")
        t.steps.push_back(AddEdge{s.at("u").get<int>(), s.at("v").get<int>()});
      else if (kind == "remove_dominated")
        t.steps.push_back(RemoveDominatedVertex{s.at("vertex").get<int>(), s.at("dominator").get<int>()});
      else if (kind == "reinsert_twin")
        t.steps.push_back(ReinsertTwin{s.at("vertex").get<int>(), s.at("twin").get<int>()});
      else
        throw InputError("unknown step " + kind);
    }
    return t;
  });
}

Json to_json(const EBSStructure& a) {
  const int n = a.size();
  Json e = Json::array(), b = Json::array(), s = Json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x <= y && a.E(x, y)) e.push_back({x, y});
      for (int z = 0; z < n; ++z) {
        if (a.B(x, y, z)) b.push_back({x, y, z});
        for (int w = 0; w < n; ++w)
          if (a.S(x, y, z, w)) s.push_back({x, y, z, w});
      }
    }
  return {{"n", n}, {"E", e}, {"B", b}, {"S", s}};
}

EBSStructure ebs_from_json(const Json& j) {
  return guarded("structure", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > 64) throw InputError("structure size must lie in 0..64");
    EBSStructure a(n);
    auto tuple = [&](const Json& t, std::size_t arity) {
      if (!t.is_array() || t.size() != arity) throw InputError("tuple of wrong arity: " + t.dump());
      std::vector<int> v;
      for (const auto& x : t) v.push_back(index_in(x, n));
      return v;
    };
    for (const auto& t : j.value("E", Json::array())) {
      auto v = tuple(t, 2);
      a.set_E(v[0], v[1], true);
      a.set_E(v[1], v[0], true);
    }
    for (const auto& t : j.value("B", Json::array())) {
      auto v = tuple(t, 3);
      a.set_B(v[0], v[1], v[2], true);
    }
    for (const auto& t : j.value("S", Json::array())) {
      auto v = tuple(t, 4);
      a.set_S(v[0], v[1], v[2], v[3], true);
    }
    return a;
  });
}

Json to_json(const AxiomReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return {{"ok", r.ok()}, {"violations", v}};
}

}  // namespace circ3
