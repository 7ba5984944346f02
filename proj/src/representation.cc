#include "circ3/representation.hh"

#include "circ3/error.hh"
#include "circ3/extension.hh"

#include <algorithm>
#include <numeric>
#include <set>

namespace circ3 {

Graph circular_clique(int p, int q) {
  if (q < 1 || p < 2 * q || std::gcd(p, q) != 1)
    throw InputError("invalid circular clique K_{" + std::to_string(p) + "," + std::to_string(q) + "}");
  Graph g(p);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (j - i >= q && j - i <= p - q) g.add_edge(i, j);
  return g;
}

namespace {

// Vertex order in which every vertex after the first of its component has an
// earlier neighbour, so adjacency constraints bite early.
std::vector<int> search_order(const Graph& g) {
  std::vector<int> order;
  Bits seen(static_cast<std::size_t>(g.order()));
  for (int s = 0; s < g.order(); ++s) {
    if (seen.test(s)) continue;
    seen.set(s);
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (int u : to_set(g.neighbours(order[i])))
        if (!seen.test(u)) {
          seen.set(u);
          order.push_back(u);
        }
  }
  return order;
}

}  // namespace

std::optional<FullHom> full_hom_search(const Graph& g, int k) {
  if (k < 1) throw InputError("k must be positive");
  const int p = 3 * k - 1;
  const Graph target = circular_clique(p, k);
  FullHom out{k, std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
  if (g.order() == 0) return out;

  std::vector<Bits> non_nbr(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) non_nbr[i] = ~target.neighbours(i);

  const auto order = search_order(g);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int v = order[depth];
    Bits dom(static_cast<std::size_t>(p));
    if (depth == 0) {
      dom.set(0);
    } else {
      dom.set();
      for (std::size_t j = 0; j < depth; ++j) {
        const int u = order[j];
        dom &= g.adjacent(u, v) ? target.neighbours(out.map[u]) : non_nbr[out.map[u]];
        if (dom.none()) return false;
      }
    }
    for (auto c = dom.find_first(); c != Bits::npos; c = dom.find_next(c)) {
      out.map[v] = static_cast<int>(c);
      if (self(self, depth + 1)) return true;
    }
    out.map[v] = -1;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return out;
}

bool verify_full_hom(const Graph& g, const FullHom& h) {
  if (h.k < 1 || static_cast<int>(h.map.size()) != g.order()) return false;
  const int p = 3 * h.k - 1;
  for (int x : h.map)
    if (x < 0 || x >= p) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      const int d = std::abs(h.map[u] - h.map[v]);
      const bool image_edge = d >= h.k && d <= p - h.k;
      if (g.adjacent(u, v) != image_edge) return false;
    }
  return true;
}

CircleRepresentation place_full_hom(const FullHom& h) {
  const int p = 3 * h.k - 1;
  std::vector<int> multiplicity(static_cast<std::size_t>(p), 0);
  for (int x : h.map) ++multiplicity[x];
  const int m = std::max(1, *std::max_element(multiplicity.begin(), multiplicity.end()));
  // Every pair of shifts differs by less than 1/(3p), which is the margin
  // between k/p and 1/3; the non-edge margin at (k-1)/p is larger.
  const Fraction delta = Fraction(1) / Fraction(3LL * p * m);
  std::vector<int> used(static_cast<std::size_t>(p), 0);
  CircleRepresentation r;
  for (int x : h.map) r.points.push_back(Fraction(x) / Fraction(p) + delta * Fraction(used[x]++));
  return r;
}

RepresentationResult find_circle_representation(const Graph& g, int cap) {
  RepresentationResult res{RepresentationOutcome::Obstructed, {}, 0, std::nullopt, cap};
  if (auto w = classify_free(g)) {
    res.obstruction = std::move(w);
    return res;
  }
  const Graph h = to_maximal_triangle_free(g).graph;
  res.cap = cap > 0 ? cap : std::max(1, h.order());
  for (int k = 1; k <= res.cap; ++k) {
    auto f = full_hom_search(h, k);
    if (!f) continue;
    f->map.resize(static_cast<std::size_t>(g.order()));
    res.rep = place_full_hom(*f);
    res.k = k;
    res.outcome = RepresentationOutcome::Represented;
    if (!verify_representation(g, res.rep)) throw InternalError("constructed representation failed verification");
    return res;
  }
  res.outcome = RepresentationOutcome::CapExhausted;
  return res;
}

bool verify_representation(const Graph& g, const CircleRepresentation& r) {
  if (static_cast<int>(r.points.size()) != g.order()) return false;
  const Fraction third = Fraction(1) / Fraction(3);
  std::set<Fraction> seen;
  for (const auto& p : r.points) {
    if (p < Fraction(0) || p >= Fraction(1)) return false;
    if (!seen.insert(p).second) return false;
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      const Fraction d = circ_dist(r.points[u], r.points[v]);
      if (d == third) return false;
      if ((d > third) != g.adjacent(u, v)) return false;
    }
  return true;
}

}  // namespace circ3
