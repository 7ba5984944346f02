#include "circ3/chromatic.hh"

#include "circ3/error.hh"
#include "circ3/obstructions.hh"
#include "circ3/oracle.hh"

#include <algorithm>
#include <numeric>

namespace circ3 {

namespace {

std::vector<int> bfs_order(const Graph& g) {
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

void require_size(const Graph& g, int limit, std::string_view route) {
  if (g.order() > limit)
    throw InputError(std::string(route) + " route is limited to " + std::to_string(limit) +
                     " vertices (override with --unsafe-size)");
}

bool is_supergraph(const Graph& big, const Graph& small) {
  if (big.order() != small.order()) return false;
  for (auto [u, v] : small.edges())
    if (!big.adjacent(u, v)) return false;
  return true;
}

ChiCVerdict hom_route(const Graph& g) {
  // chi_c is attained by some p/q with p <= n, and p/q < 3 forces
  // p/q <= (3q-1)/q, so k = floor(n/2) is the largest target needed.
  const int top = std::max(1, g.order() / 2);
  if (!hom_exists(g, circular_clique(3 * top - 1, top)))
    return {Route::Hom, false,
            Refutation{"no homomorphism into K_{" + std::to_string(3 * top - 1) + "," + std::to_string(top) + "}"}};
  for (int k = 1; k <= top; ++k)
    if (auto f = hom_exists(g, circular_clique(3 * k - 1, k)))
      return {Route::Hom, true, HomCertificate{{3 * k - 1, k}, *f}};
  throw InternalError("homomorphism into the largest target but none found on retry");
}

ChiCVerdict spanning_route(const Graph& g) {
  std::vector<Edge> missing;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) missing.emplace_back(u, v);
  Graph h = g;
  long long nodes = 0;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    ++nodes;
    if (is_free(h)) return true;
    if (i == missing.size()) return false;
    auto [u, v] = missing[i];
    if (!h.neighbours(u).intersects(h.neighbours(v))) {
      h.add_edge(u, v);
      if (self(self, i + 1)) return true;
      h.remove_edge(u, v);
    }
    return self(self, i + 1);
  };
  if (is_triangle_free(g) && rec(rec, 0)) return {Route::Spanning, true, FreeSpanningSupergraph{h}};
  return {Route::Spanning, false,
          Refutation{"exhausted " + std::to_string(nodes) + " triangle-free spanning supergraphs"}};
}

ChiCVerdict brandt_route(const Graph& g) {
  std::vector<Edge> missing;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) missing.emplace_back(u, v);
  Graph h = g;
  long long nodes = 0;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    ++nodes;
    if (i == missing.size()) return is_maximal_triangle_free(h) && !has_subgraph_h10_minus_v(h);
    auto [u, v] = missing[i];
    if (!h.neighbours(u).intersects(h.neighbours(v))) {
      h.add_edge(u, v);
      if (self(self, i + 1)) return true;
      h.remove_edge(u, v);
    }
    return self(self, i + 1);
  };
  if (is_triangle_free(g) && rec(rec, 0)) return {Route::Brandt, true, BrandtSupergraph{h}};
  return {Route::Brandt, false,
          Refutation{"exhausted " + std::to_string(nodes) + " nodes without an H10-v-free maximal triangle-free supergraph"}};
}

// Works in the complement: delete edges of the complement of g until a
// 3K1-free unit Helly circular-arc graph remains.
ChiCVerdict complement_route(const Graph& g) {
  Graph s = complement(g);
  const auto present = s.edges();
  auto has_independent_triple = [](const Graph& x) {
    for (int u = 0; u < x.order(); ++u)
      for (int v = u + 1; v < x.order(); ++v) {
        if (x.adjacent(u, v)) continue;
        Bits rest = ~(x.neighbours(u) | x.neighbours(v));
        rest.reset(u);
        rest.reset(v);
        if (rest.any()) return true;
      }
    return false;
  };
  long long nodes = 0;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    ++nodes;
    if (!is_uca_alpha_lt_3(s)) return true;
    if (i == present.size()) return false;
    auto [u, v] = present[i];
    // Deleting uv leaves an independent triple iff some w misses both.
    Bits rest = ~(s.neighbours(u) | s.neighbours(v));
    rest.reset(u);
    rest.reset(v);
    if (rest.none()) {
      s.remove_edge(u, v);
      if (self(self, i + 1)) return true;
      s.add_edge(u, v);
    }
    return self(self, i + 1);
  };
  if (!has_independent_triple(s) && rec(rec, 0)) {
    auto m = arc_model(s);
    if (!m) throw InternalError("3K1-free complement subgraph without an arc model");
    return {Route::Complement, true, ComplementArcSubgraph{s, *m}};
  }
  return {Route::Complement, false,
          Refutation{"exhausted " + std::to_string(nodes) + " 3K1-free spanning subgraphs of the complement"}};
}

}  // namespace

std::optional<std::vector<int>> hom_exists(const Graph& g, const Graph& h) {
  std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
  if (g.order() == 0) return map;
  if (h.order() == 0) return std::nullopt;
  const auto order = bfs_order(g);
  Bits everything(static_cast<std::size_t>(h.order()));
  everything.set();
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int v = order[depth];
    Bits dom = everything;
    for (std::size_t j = 0; j < depth && dom.any(); ++j)
      if (g.adjacent(order[j], v)) dom &= h.neighbours(map[order[j]]);
    for (auto c = dom.find_first(); c != Bits::npos; c = dom.find_next(c)) {
      map[v] = static_cast<int>(c);
      if (self(self, depth + 1)) return true;
    }
    map[v] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

bool verify_hom(const Graph& g, const Graph& h, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != g.order()) return false;
  for (int x : map)
    if (x < 0 || x >= h.order()) return false;
  for (auto [u, v] : g.edges())
    if (!h.adjacent(map[u], map[v])) return false;
  return true;
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int c = 1;; ++c)
    if (hom_exists(g, complete_graph(c))) return c;
}

std::vector<CircularClique> chi_c_candidates(int n, int chi) {
  std::vector<CircularClique> out;
  for (int p = 2; p <= n; ++p)
    for (int q = 1; 2 * q <= p; ++q)
      if (std::gcd(p, q) == 1 && p > (chi - 1) * q && p <= chi * q) out.push_back({p, q});
  std::ranges::sort(out, [](const CircularClique& a, const CircularClique& b) { return a.p * b.q < b.p * a.q; });
  return out;
}

Fraction chi_c_exact(const Graph& g) {
  if (g.edge_count() == 0) return Fraction(1);
  const int chi = chromatic_number(g);
  for (const auto& c : chi_c_candidates(g.order(), chi))
    if (hom_exists(g, circular_clique(c))) return Fraction(Fraction::Int(c.p), Fraction::Int(c.q));
  throw InternalError("no candidate fraction admits a homomorphism");
}

std::string_view route_name(Route r) {
  switch (r) {
    case Route::Hom:
      return "hom";
    case Route::Spanning:
      return "spanning";
    case Route::Brandt:
      return "brandt";
    case Route::Complement:
      return "complement";
    case Route::All:
      return "all";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route r : {Route::Hom, Route::Spanning, Route::Brandt, Route::Complement, Route::All})
    if (route_name(r) == name) return r;
  return std::nullopt;
}

ChiCVerdict chi_c_below_three(const Graph& g, Route route, const SizeGuard& guard) {
  switch (route) {
    case Route::Hom:
      require_size(g, guard.hom, "hom");
      return hom_route(g);
    case Route::Spanning:
      require_size(g, guard.exponential, "spanning");
      return spanning_route(g);
    case Route::Brandt:
      require_size(g, guard.exponential, "brandt");
      return brandt_route(g);
    case Route::Complement:
      require_size(g, guard.exponential, "complement");
      return complement_route(g);
    case Route::All: {
      auto hom = chi_c_below_three(g, Route::Hom, guard);
      for (Route r : {Route::Spanning, Route::Brandt})
        if (chi_c_below_three(g, r, guard).below_three != hom.below_three)
          throw InternalError(std::string(route_name(r)) + " route disagrees with hom route");
      hom.route = Route::All;
      return hom;
    }
  }
  throw InputError("unknown route");
}

bool verify_certificate(const Graph& g, const ChiCVerdict& v) {
  const int n = g.order();
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Refutation>) {
          return !v.below_three && !c.descriptor.empty();
        } else {
          if (!v.below_three) return false;
          if constexpr (std::is_same_v<T, HomCertificate>) {
            const auto [p, q] = c.target;
            if (q < 1 || p < 2 * q || std::gcd(p, q) != 1 || p >= 3 * q) return false;
            if (static_cast<int>(c.map.size()) != n) return false;
            for (int x : c.map)
              if (x < 0 || x >= p) return false;
            for (auto [a, b] : g.edges()) {
              const int d = std::abs(c.map[a] - c.map[b]);
              if (d < q || d > p - q) return false;
            }
            return true;
          } else if constexpr (std::is_same_v<T, FreeSpanningSupergraph>) {
            if (!is_supergraph(c.graph, g)) return false;
            for (Pattern p : kAllPatterns)
              if (oracle::induced(c.graph, p)) return false;
            return true;
          } else if constexpr (std::is_same_v<T, BrandtSupergraph>) {
            if (!is_supergraph(c.graph, g)) return false;
            const auto a = oracle::adjacency(c.graph);
            for (int x = 0; x < n; ++x)
              for (int y = x + 1; y < n; ++y) {
                int common = 0;
                for (int z = 0; z < n; ++z) common += a[x][z] && a[y][z];
                if (a[x][y] ? common > 0 : common == 0) return false;
              }
            return n <= 10 ? !oracle::subgraph_h10_minus_v(c.graph) : !has_subgraph_h10_minus_v(c.graph);
          } else {
            const Graph co = complement(g);
            if (!is_supergraph(co, c.graph)) return false;
            const auto a = oracle::adjacency(c.graph);
            for (int x = 0; x < n; ++x)
              for (int y = x + 1; y < n; ++y)
                for (int z = y + 1; z < n; ++z)
                  if (!a[x][y] && !a[x][z] && !a[y][z]) return false;
            return verify_arc_model(c.graph, c.model);
          }
        }
      },
      v.certificate);
}

AuditReport equivalence_audit(const Graph& g, const SizeGuard& guard) {
  AuditReport report{{}, false};
  for (Route r : {Route::Hom, Route::Spanning, Route::Brandt, Route::Complement}) {
    auto v = chi_c_below_three(g, r, guard);
    if (!verify_certificate(g, v))
      throw InternalError(std::string(route_name(r)) + " certificate failed verification on\n" + serialize_graph(g));
    report.verdicts.push_back(std::move(v));
  }
  report.below_three = report.verdicts.front().below_three;
  for (const auto& v : report.verdicts)
    if (v.below_three != report.below_three)
      throw InternalError("routes disagree on\n" + serialize_graph(g));
  return report;
}

}  // namespace circ3
