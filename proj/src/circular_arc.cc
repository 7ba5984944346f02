#include "circ3/circular_arc.hh"

#include "circ3/error.hh"
#include "circ3/representation.hh"

#include <set>

namespace circ3 {

namespace {

const Fraction kCirc(ArcModel::circumference);

// Enumerates cliques of g (all of them, or only maximal ones) and stops as
// soon as `f` returns false.
template <typename F>
bool each_clique(const Graph& g, bool only_maximal, F&& f) {
  std::vector<int> current;
  auto rec = [&](auto&& self, Bits cand, Bits excluded) -> bool {
    if (!only_maximal && !current.empty() && !f(current)) return false;
    if (only_maximal && cand.none() && excluded.none() && !current.empty()) return f(current);
    for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
      current.push_back(static_cast<int>(v));
      if (!self(self, cand & g.neighbours(static_cast<int>(v)), excluded & g.neighbours(static_cast<int>(v))))
        return false;
      current.pop_back();
      cand.reset(v);
      excluded.set(v);
    }
    return true;
  };
  Bits all(static_cast<std::size_t>(g.order()));
  all.set();
  return rec(rec, all, Bits(static_cast<std::size_t>(g.order())));
}

}  // namespace

bool arc_contains(const Arc& a, const Fraction& x) {
  return wrap(x - a.start, kCirc) <= wrap(a.end - a.start, kCirc);
}

bool arcs_intersect(const Arc& a, const Arc& b) { return arc_contains(a, b.start) || arc_contains(b, a.start); }

std::optional<ObstructionWitness> is_uca_alpha_lt_3(const Graph& g) { return classify_free(complement(g)); }

std::optional<ArcModel> arc_model(const Graph& g) {
  if (is_uca_alpha_lt_3(g)) return std::nullopt;
  auto res = find_circle_representation(complement(g));
  if (res.outcome != RepresentationOutcome::Represented)
    throw InternalError("free complement without a circle representation");
  ArcModel m;
  const Fraction half = Fraction(1) / Fraction(2);
  for (const auto& t : res.rep.points) {
    const Fraction c = kCirc * t;
    m.arcs.push_back({wrap(c - half, kCirc), wrap(c + half, kCirc)});
  }
  if (!verify_arc_model(g, m)) throw InternalError("constructed arc model failed verification");
  return m;
}

bool verify_arc_model(const Graph& g, const ArcModel& m) {
  const int n = g.order();
  if (static_cast<int>(m.arcs.size()) != n) return false;
  std::set<Fraction> ends;
  for (const auto& a : m.arcs) {
    for (const auto* e : {&a.start, &a.end})
      if (*e < Fraction(0) || *e >= kCirc) return false;
    if (wrap(a.end - a.start, kCirc) != Fraction(1)) return false;
    if (!ends.insert(a.start).second || !ends.insert(a.end).second) return false;
  }
  Graph inter(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (arcs_intersect(m.arcs[u], m.arcs[v])) inter.add_edge(u, v);
  if (!(inter == g)) return false;

  // A nonempty intersection of closed arcs shorter than the circle contains
  // the start of one of them.
  auto common_point = [&](const std::vector<int>& family) {
    for (int s : family) {
      bool all = true;
      for (int t : family) all = all && arc_contains(m.arcs[t], m.arcs[s].start);
      if (all) return true;
    }
    return false;
  };
  return each_clique(inter, n > 10, common_point);
}

}  // namespace circ3
