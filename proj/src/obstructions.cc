#include "circ3/obstructions.hh"

#include <algorithm>

namespace circ3 {

namespace {

Graph make_pattern(Pattern p) {
  switch (p) {
    case Pattern::K3:
      return complete_graph(3);
    case Pattern::K1_2K2: {
      const Edge e[] = {{1, 2}, {3, 4}};
      return Graph::from_edges(5, e);
    }
    case Pattern::K1_C5: {
      const Edge e[] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}};
      return Graph::from_edges(6, e);
    }
    case Pattern::C6:
      return cycle_graph(6);
  }
  return {};
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

template <typename F>
bool for_each_bit(const Bits& b, F&& f) {
  for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v))
    if (f(static_cast<int>(v))) return true;
  return false;
}

std::optional<ObstructionWitness> find_k3(const Graph& g) {
  for (int a = 0; a < g.order(); ++a)
    for (auto b = g.neighbours(a).find_next(a); b != Bits::npos; b = g.neighbours(a).find_next(b)) {
      Bits common = g.neighbours(a) & g.neighbours(b);
      if (auto c = common.find_next(b); c != Bits::npos)
        return ObstructionWitness{Pattern::K3, {a, static_cast<int>(b), static_cast<int>(c)}};
    }
  return std::nullopt;
}

// t isolated from an induced 2K2 {a-b, c-d}.
std::optional<ObstructionWitness> find_k1_2k2(const Graph& g) {
  std::optional<ObstructionWitness> hit;
  for (int t = 0; t < g.order() && !hit; ++t) {
    Bits far = ~g.neighbours(t);
    far.reset(t);
    for_each_bit(far, [&](int a) {
      return for_each_bit(far & g.neighbours(a), [&](int b) {
        Bits rest = far & ~g.neighbours(a) & ~g.neighbours(b);
        rest.reset(a);
        rest.reset(b);
        return for_each_bit(rest, [&](int c) {
          Bits ds = rest & g.neighbours(c);
          if (ds.none()) return false;
          hit = ObstructionWitness{Pattern::K1_2K2, {t, a, b, c, static_cast<int>(ds.find_first())}};
          return true;
        });
      });
    });
  }
  return hit;
}

// t isolated from an induced cycle c1-c2-c3-c4-c5.
std::optional<ObstructionWitness> find_k1_c5(const Graph& g) {
  std::optional<ObstructionWitness> hit;
  for (int t = 0; t < g.order() && !hit; ++t) {
    Bits far = ~g.neighbours(t);
    far.reset(t);
    for_each_bit(far, [&](int c1) {
      return for_each_bit(far & g.neighbours(c1), [&](int c2) {
        Bits s3 = far & g.neighbours(c2) & ~g.neighbours(c1);
        s3.reset(c1);
        return for_each_bit(s3, [&](int c3) {
          Bits s4 = far & g.neighbours(c3) & ~g.neighbours(c1) & ~g.neighbours(c2);
          s4.reset(c1);
          s4.reset(c2);
          return for_each_bit(s4, [&](int c4) {
            Bits s5 = far & g.neighbours(c4) & g.neighbours(c1) & ~g.neighbours(c2) & ~g.neighbours(c3);
            s5.reset(c2);
            s5.reset(c3);
            if (s5.none()) return false;
            hit = ObstructionWitness{Pattern::K1_C5, {t, c1, c2, c3, c4, static_cast<int>(s5.find_first())}};
            return true;
          });
        });
      });
    });
  }
  return hit;
}

// Induced cycle c0-c1-c2-c3-c4-c5.
std::optional<ObstructionWitness> find_c6(const Graph& g) {
  std::optional<ObstructionWitness> hit;
  for (int c0 = 0; c0 < g.order() && !hit; ++c0) {
    const Bits& n0 = g.neighbours(c0);
    for_each_bit(n0, [&](int c1) {
      Bits s2 = g.neighbours(c1) & ~n0;
      s2.reset(c0);
      return for_each_bit(s2, [&](int c2) {
        Bits s3 = g.neighbours(c2) & ~n0 & ~g.neighbours(c1);
        s3.reset(c0);
        s3.reset(c1);
        return for_each_bit(s3, [&](int c3) {
          Bits s4 = g.neighbours(c3) & ~n0 & ~g.neighbours(c1) & ~g.neighbours(c2);
          s4.reset(c0);
          s4.reset(c1);
          s4.reset(c2);
          return for_each_bit(s4, [&](int c4) {
            Bits s5 = g.neighbours(c4) & n0 & ~g.neighbours(c1) & ~g.neighbours(c2) & ~g.neighbours(c3);
            s5.reset(c1);
            s5.reset(c2);
            s5.reset(c3);
            if (s5.none()) return false;
            hit = ObstructionWitness{Pattern::C6, {c0, c1, c2, c3, c4, static_cast<int>(s5.find_first())}};
            return true;
          });
        });
      });
    });
  }
  return hit;
}

}  // namespace

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::K3:
      return "K3";
    case Pattern::K1_2K2:
      return "K1_2K2";
    case Pattern::K1_C5:
      return "K1_C5";
    case Pattern::C6:
      return "C6";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (Pattern p : kAllPatterns)
    if (pattern_name(p) == name) return p;
  return std::nullopt;
}

const Graph& pattern_graph(Pattern p) {
  static const std::array<Graph, 4> library = {make_pattern(Pattern::K3), make_pattern(Pattern::K1_2K2),
                                               make_pattern(Pattern::K1_C5), make_pattern(Pattern::C6)};
  return library[static_cast<std::size_t>(p)];
}

const Graph& petersen_graph() {
  static const Graph g = make_petersen();
  return g;
}

const Graph& petersen_minus_vertex() {
  static const Graph g = [] {
    std::vector<int> keep(9);
    for (int i = 0; i < 9; ++i) keep[i] = i;
    return petersen_graph().induced(keep);
  }();
  return g;
}

std::optional<ObstructionWitness> find_pattern(const Graph& g, Pattern p) {
  switch (p) {
    case Pattern::K3:
      return find_k3(g);
    case Pattern::K1_2K2:
      return find_k1_2k2(g);
    case Pattern::K1_C5:
      return find_k1_c5(g);
    case Pattern::C6:
      return find_c6(g);
  }
  return std::nullopt;
}

std::optional<ObstructionWitness> classify_free(const Graph& g) {
  for (Pattern p : kAllPatterns)
    if (auto w = find_pattern(g, p)) return w;
  return std::nullopt;
}

bool verify_witness(const Graph& g, const ObstructionWitness& w) {
  const Graph& pat = pattern_graph(w.kind);
  if (static_cast<int>(w.vertices.size()) != pat.order()) return false;
  for (int v : w.vertices)
    if (v < 0 || v >= g.order()) return false;
  auto sorted = w.vertices;
  std::ranges::sort(sorted);
  if (std::ranges::adjacent_find(sorted) != sorted.end()) return false;
  Graph sub = g.induced(w.vertices);
  return sub == pat && isomorphic(sub, pat);
}

std::optional<std::vector<int>> find_subgraph_h10_minus_v(const Graph& g) {
  const Graph& pat = petersen_minus_vertex();
  if (g.order() < pat.order() || g.edge_count() < pat.edge_count()) return std::nullopt;

  // BFS order from pattern vertex 0 so each later vertex has a placed neighbour.
  std::vector<int> order{0};
  Bits seen(static_cast<std::size_t>(pat.order()));
  seen.set(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto u = pat.neighbours(order[i]).find_first(); u != Bits::npos; u = pat.neighbours(order[i]).find_next(u))
      if (!seen.test(u)) {
        seen.set(u);
        order.push_back(static_cast<int>(u));
      }

  std::vector<int> image(static_cast<std::size_t>(pat.order()), -1);
  Bits used(static_cast<std::size_t>(g.order()));
  auto place = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int pv = order[depth];
    Bits cand(static_cast<std::size_t>(g.order()));
    cand.set();
    for (std::size_t j = 0; j < depth; ++j)
      if (pat.adjacent(pv, order[j])) cand &= g.neighbours(image[order[j]]);
    cand &= ~used;
    for (auto c = cand.find_first(); c != Bits::npos; c = cand.find_next(c)) {
      if (g.degree(static_cast<int>(c)) < pat.degree(pv)) continue;
      image[pv] = static_cast<int>(c);
      used.set(c);
      if (self(self, depth + 1)) return true;
      used.reset(c);
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return image;
}

bool is_maximal_triangle_free(const Graph& g) {
  return is_triangle_free(g) && common_neighbour_deficiencies(g).empty();
}

std::string describe(const ObstructionWitness& w) {
  std::string s(pattern_name(w.kind));
  for (int v : w.vertices) s += " " + std::to_string(v);
  return s;
}

}  // namespace circ3
