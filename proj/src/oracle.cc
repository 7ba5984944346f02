#include "circ3/oracle.hh"

#include "circ3/error.hh"

#include <numeric>

namespace circ3::oracle {

Matrix adjacency(const Graph& g) {
  const int n = g.order();
  Matrix m(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

namespace {

// Calls f on every injective map {0..k-1} -> {0..n-1}; stops when f returns true.
template <typename F>
bool each_injection(int k, int n, F&& f) {
  std::vector<int> map(static_cast<std::size_t>(k));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return f(map);
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      map[i] = c;
      if (self(self, i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool induced(const Graph& g, const Graph& pattern) {
  const Matrix a = adjacency(g), b = adjacency(pattern);
  const int k = pattern.order();
  if (k > g.order()) return false;
  return each_injection(k, g.order(), [&](const std::vector<int>& m) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (a[m[i]][m[j]] != b[i][j]) return false;
    return true;
  });
}

bool induced(const Graph& g, Pattern p) { return induced(g, pattern_graph(p)); }

bool subgraph_h10_minus_v(const Graph& g) {
  if (g.order() > 10) throw InputError("oracle guard: at most 10 vertices");
  // Petersen graph minus its vertex 9, rebuilt here from the same labeling.
  Matrix pat(9, std::vector<char>(9, 0));
  auto edge = [&](int u, int v) {
    if (u < 9 && v < 9) pat[u][v] = pat[v][u] = 1;
  };
  for (int i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);
    edge(i, i + 5);
    edge(5 + i, 5 + (i + 2) % 5);
  }
  const Matrix a = adjacency(g);
  return each_injection(9, g.order(), [&](const std::vector<int>& m) {
    for (int i = 0; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j)
        if (pat[i][j] && !a[m[i]][m[j]]) return false;
    return true;
  });
}

bool hom_to_circular_clique(const Graph& g, int p, int q) {
  const int n = g.order();
  if (n == 0) return true;
  const Matrix a = adjacency(g);
  auto target_edge = [&](int i, int j) {
    const int d = i > j ? i - j : j - i;
    return q <= d && d <= p - q;
  };
  std::vector<int> map(static_cast<std::size_t>(n), 0);
  while (true) {
    // First vertex whose image breaks an edge to an earlier vertex.
    int bad = -1;
    for (int v = 0; v < n && bad < 0; ++v)
      for (int u = 0; u < v; ++u)
        if (a[u][v] && !target_edge(map[u], map[v])) {
          bad = v;
          break;
        }
    if (bad < 0) return true;
    // Skip every map that agrees with this one on 0..bad.
    for (int v = bad + 1; v < n; ++v) map[v] = p - 1;
    int i = n - 1;
    while (i >= 0 && map[i] == p - 1) map[i--] = 0;
    if (i < 0) return false;
    ++map[i];
  }
}

Fraction chi_c(const Graph& g) {
  if (g.edge_count() == 0) throw InputError("circular chromatic number needs an edge");
  const int n = g.order();
  bool found = false;
  long long best_p = 0, best_q = 1;
  for (int p = 2; p <= n; ++p)
    for (int q = 1; 2 * q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (found && p * best_q >= best_p * q) continue;
      if (hom_to_circular_clique(g, p, q)) {
        found = true;
        best_p = p;
        best_q = q;
      }
    }
  if (!found) throw InternalError("no circular clique on at most n vertices admits a homomorphism");
  return Fraction(Fraction::Int(best_p), Fraction::Int(best_q));
}

bool spanning_free(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw InputError("oracle guard: at most 8 vertices");
  std::vector<Edge> missing;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) missing.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << missing.size()); ++mask) {
    Graph h = g;
    for (std::size_t i = 0; i < missing.size(); ++i)
      if (mask >> i & 1) h.add_edge(missing[i].first, missing[i].second);
    bool free = true;
    for (Pattern p : kAllPatterns) free = free && !induced(h, p);
    if (free) return true;
  }
  return false;
}

std::uint64_t graph_count(int n) {
  if (n < 0 || n > 7) throw InputError("sweeps are limited to at most 7 vertices");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) g.add_edge(u, v);
  return g;
}

void all_graphs(int n, const std::function<void(const Graph&)>& f) {
  const std::uint64_t total = graph_count(n);
  for (std::uint64_t c = 0; c < total; ++c) f(graph_from_code(n, c));
}

}  // namespace circ3::oracle
