#include "circ3/graph.hh"

#include "circ3/error.hh"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace circ3 {

Graph::Graph(int n) : rows_(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n))) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (auto v = rows_[u].find_next(u); v != Bits::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw InputError("loop edge " + std::to_string(u));
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  rows_[u].reset(v);
  rows_[v].reset(u);
}

int Graph::add_vertex(const VertexSet& nbrs) {
  const int v = order();
  for (auto& r : rows_) r.push_back(false);
  rows_.emplace_back(static_cast<std::size_t>(v + 1));
  for (int u : nbrs) add_edge(u, v);
  return v;
}

void Graph::isolate(int v) {
  for (auto u = rows_[v].find_first(); u != Bits::npos; u = rows_[v].find_next(u))
    rows_[u].reset(v);
  rows_[v].reset();
}

Graph Graph::induced(std::span<const int> vs) const {
  Graph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

VertexSet maximal_independent_superset(const Graph& g, const VertexSet& seed) {
  for (int v : seed)
    if (v < 0 || v >= g.order()) throw InputError("seed vertex out of range");
  if (!is_independent(g, seed)) {
    for (std::size_t i = 0; i < seed.size(); ++i)
      for (std::size_t j = i + 1; j < seed.size(); ++j)
        if (g.adjacent(seed[i], seed[j]))
          throw PreconditionError("seed is not independent",
                                  "edge " + std::to_string(seed[i]) + " " + std::to_string(seed[j]));
  }
  Bits in = to_bits(g.order(), seed);
  Bits blocked(static_cast<std::size_t>(g.order()));
  for (int v : seed) blocked |= g.neighbours(v);
  for (int v = 0; v < g.order(); ++v) {
    if (in.test(v) || blocked.test(v)) continue;
    in.set(v);
    blocked |= g.neighbours(v);
  }
  return to_set(in);
}

std::vector<Edge> common_neighbour_deficiencies(const Graph& g) {
  std::vector<Edge> out;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (!g.adjacent(a, b) && !g.neighbours(a).intersects(g.neighbours(b))) out.emplace_back(a, b);
  return out;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbours(u).intersects(g.neighbours(v))) return false;
  return true;
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<int>& map, Bits& used, int next) {
  if (next == g.order()) return true;
  for (int c = 0; c < h.order(); ++c) {
    if (used.test(c) || g.degree(next) != h.degree(c)) continue;
    bool ok = true;
    for (int u = 0; u < next && ok; ++u) ok = g.adjacent(u, next) == h.adjacent(map[u], c);
    if (!ok) continue;
    map[next] = c;
    used.set(c);
    if (extend_isomorphism(g, h, map, used, next + 1)) return true;
    used.reset(c);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::ranges::sort(dg);
  std::ranges::sort(dh);
  if (dg != dh) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
  Bits used(static_cast<std::size_t>(h.order()));
  if (!extend_isomorphism(g, h, map, used, 0)) return std::nullopt;
  return map;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses whitespace-separated non-negative integers; fails on anything else.
std::vector<long long> parse_ints(std::string_view line, int lineno) {
  std::vector<long long> out;
  while (true) {
    line = trim(line);
    if (line.empty()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw InputError("line " + std::to_string(lineno) + ": malformed line");
    out.push_back(value);
    line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  int lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto ints = parse_ints(line, lineno);
    if (!g) {
      if (ints.size() != 1 || ints[0] < 0 || ints[0] > 100000)
        throw InputError("line " + std::to_string(lineno) + ": expected vertex count");
      g.emplace(static_cast<int>(ints[0]));
      continue;
    }
    if (ints.size() != 2) throw InputError("line " + std::to_string(lineno) + ": malformed line");
    const long long u = ints[0], v = ints[1];
    if (u == v) throw InputError("line " + std::to_string(lineno) + ": loop edge rejected");
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
      throw InputError("line " + std::to_string(lineno) + ": vertex index out of range");
    g->add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!g) throw InputError("missing vertex count");
  return *g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph read_graph_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_graph(buf.str());
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Bits to_bits(int n, const VertexSet& s) {
  Bits b(static_cast<std::size_t>(n));
  for (int v : s) b.set(static_cast<std::size_t>(v));
  return b;
}

VertexSet to_set(const Bits& b) {
  VertexSet out;
  for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v)) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace circ3
