#include "circ3/extension.hh"

#include "circ3/error.hh"

#include <algorithm>

namespace circ3 {

namespace {

void require_free(const Graph& g) {
  if (auto w = classify_free(g)) throw PreconditionError("graph contains a forbidden induced pattern", describe(*w));
}

std::optional<Edge> find_dominated(const Graph& g, const Bits& active) {
  for (auto x = active.find_first(); x != Bits::npos; x = active.find_next(x))
    for (auto y = active.find_first(); y != Bits::npos; y = active.find_next(y))
      if (x != y && g.neighbours(x).is_subset_of(g.neighbours(y)))
        return Edge{static_cast<int>(x), static_cast<int>(y)};
  return std::nullopt;
}

Graph active_part(const Graph& g, const Bits& active) {
  auto vs = to_set(active);
  return g.induced(vs);
}

}  // namespace

Graph replay(const Graph& start, const ExtensionTrace& trace) {
  Graph g = start;
  auto check = [&](int v) {
    if (v < 0 || v >= g.order()) throw InputError("trace refers to vertex " + std::to_string(v) + " out of range");
  };
  for (const auto& step : trace.steps) {
    if (auto* s = std::get_if<AddVertex>(&step)) {
      if (s->vertex != g.order()) throw InputError("trace adds vertex out of order");
      for (int u : s->independent_set) check(u);
      if (!is_independent(g, s->independent_set)) throw InputError("trace attaches a vertex to a non-independent set");
      g.add_vertex(s->independent_set);
    } else if (auto* e = std::get_if<AddEdge>(&step)) {
      check(e->u);
      check(e->v);
      if (g.adjacent(e->u, e->v)) throw InputError("trace adds an existing edge");
      g.add_edge(e->u, e->v);
    } else if (auto* r = std::get_if<RemoveDominatedVertex>(&step)) {
      check(r->vertex);
      check(r->dominator);
      if (!g.neighbours(r->vertex).is_subset_of(g.neighbours(r->dominator)))
        throw InputError("trace removes a vertex that is not dominated");
      g.isolate(r->vertex);
    } else {
      const auto& t = std::get<ReinsertTwin>(step);
      check(t.vertex);
      check(t.twin);
      if (g.degree(t.vertex) != 0) throw InputError("trace reinserts a vertex that still has edges");
      for (int u : to_set(g.neighbours(t.twin))) g.add_edge(t.vertex, u);
    }
  }
  return g;
}

Graph extend_one_vertex(const Graph& g, const VertexSet& i) {
  require_free(g);
  for (int v : i)
    if (v < 0 || v >= g.order()) throw InputError("vertex out of range in independent set");
  VertexSet sorted = i;
  std::ranges::sort(sorted);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (maximal_independent_superset(g, sorted) != sorted)
    throw PreconditionError("set is not a maximal independent set");
  Graph h = g;
  h.add_vertex(sorted);
  if (auto w = classify_free(h)) throw InternalError("one-vertex extension produced " + describe(*w));
  return h;
}

ExtensionResult to_maximal_triangle_free(const Graph& g) {
  require_free(g);
  ExtensionResult out{g, {}};
  auto deficient = common_neighbour_deficiencies(out.graph);
  while (!deficient.empty()) {
    auto [x, y] = deficient.front();
    VertexSet i = maximal_independent_superset(out.graph, {x, y});
    const int v = out.graph.add_vertex(i);
    out.trace.steps.emplace_back(AddVertex{v, i});
    if (auto w = classify_free(out.graph)) throw InternalError("vertex extension produced " + describe(*w));
    auto next = common_neighbour_deficiencies(out.graph);
    if (next.size() >= deficient.size()) throw InternalError("deficiency count did not decrease");
    deficient = std::move(next);
  }
  return out;
}

bool is_point_incomparable(const Graph& g) {
  Bits all(static_cast<std::size_t>(g.order()));
  all.set();
  return !find_dominated(g, all).has_value();
}

EdgeAdditionOutcome check_edge_addition(const Graph& g, int x, int y) {
  require_free(g);
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) throw InputError("vertex out of range");
  if (x == y || g.adjacent(x, y)) throw PreconditionError("vertices must be distinct and non-adjacent");
  Bits all(static_cast<std::size_t>(g.order()));
  all.set();
  if (auto d = find_dominated(g, all))
    throw PreconditionError("graph is not point-incomparable",
                            "N(" + std::to_string(d->first) + ") within N(" + std::to_string(d->second) + ")");
  if (g.neighbours(x).intersects(g.neighbours(y))) return EdgeAdditionOutcome::CreatesTriangle;
  Graph h = g;
  h.add_edge(x, y);
  if (auto w = classify_free(h))
    throw InternalError("triangle-free edge addition produced " + describe(*w));
  return EdgeAdditionOutcome::StaysFree;
}

ExtensionResult spanning_free_extension(const Graph& g) {
  require_free(g);
  ExtensionResult out{g, {}};
  Graph& h = out.graph;
  Bits active(static_cast<std::size_t>(g.order()));
  active.set();
  std::vector<Edge> removed;

  while (true) {
    // Set a dominated vertex aside, but never shrink below two vertices: a
    // twin of an isolated vertex would have no common neighbour with it.
    if (active.count() >= 3) {
      if (auto d = find_dominated(h, active)) {
        auto [x, y] = *d;
        out.trace.steps.emplace_back(RemoveDominatedVertex{x, y});
        h.isolate(x);
        active.reset(x);
        removed.push_back(*d);
        continue;
      }
    }
    bool added = false;
    for (auto u = active.find_first(); u != Bits::npos && !added; u = active.find_next(u))
      for (auto v = active.find_next(u); v != Bits::npos && !added; v = active.find_next(v)) {
        if (h.adjacent(u, v)) continue;
        h.add_edge(u, v);
        if (is_free(active_part(h, active))) {
          out.trace.steps.emplace_back(AddEdge{static_cast<int>(u), static_cast<int>(v)});
          added = true;
        } else {
          h.remove_edge(u, v);
        }
      }
    if (!added) break;
  }

  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    auto [x, y] = *it;
    for (int u : to_set(h.neighbours(y))) h.add_edge(x, u);
    active.set(x);
    out.trace.steps.emplace_back(ReinsertTwin{x, y});
  }

  if (auto w = classify_free(h)) throw InternalError("spanning extension produced " + describe(*w));
  if (!is_maximal_triangle_free(h)) throw InternalError("spanning extension is not maximal triangle-free");
  return out;
}

}  // namespace circ3
