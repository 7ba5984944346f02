#include "circ3/ebs.hh"

#include "circ3/error.hh"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace circ3 {

EBSStructure::EBSStructure(int n)
    : n_(n),
      e_(static_cast<std::size_t>(n) * n, 0),
      b_(static_cast<std::size_t>(n) * n * n, 0),
      s_(static_cast<std::size_t>(n) * n * n * n, 0) {
  if (n < 0) throw InputError("negative structure size");
}

Graph EBSStructure::graph() const {
  Graph g(n_);
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (E(x, y)) g.add_edge(x, y);
  return g;
}

namespace {

const Fraction& third() {
  static const Fraction t = Fraction(1) / Fraction(3);
  return t;
}

bool distinct(std::initializer_list<int> xs) {
  for (auto i = xs.begin(); i != xs.end(); ++i)
    for (auto j = i + 1; j != xs.end(); ++j)
      if (*i == *j) return false;
  return true;
}

}  // namespace

bool geo_E(const Fraction& a, const Fraction& b) { return circ_dist(a, b) > third(); }

bool geo_B(const Fraction& x, const Fraction& y, const Fraction& z) {
  if (x == y || y == z || x == z) return false;
  if (geo_E(x, y) || geo_E(y, z) || geo_E(x, z)) return false;
  return circ_dist(x, y) + circ_dist(y, z) == circ_dist(x, z);
}

bool geo_S(const Fraction& a, const Fraction& b, const Fraction& c, const Fraction& d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) return false;
  const Fraction ob = wrap(b - a), oc = wrap(c - a), od = wrap(d - a);
  return (ob < oc) != (od < oc);
}

void check_point_set(std::span<const Fraction> points) {
  std::set<Fraction> seen;
  for (const auto& p : points) {
    if (p < Fraction(0) || p >= Fraction(1)) throw InputError("point " + p.to_string() + " outside [0,1)");
    if (!seen.insert(p).second) throw InputError("repeated point " + p.to_string());
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (circ_dist(points[i], points[j]) == third())
        throw InputError("points " + std::to_string(i) + " and " + std::to_string(j) + " at distance exactly 1/3");
}

EBSStructure ebs_from_points(std::span<const Fraction> points) {
  check_point_set(points);
  const int n = static_cast<int>(points.size());
  EBSStructure a(n);
  // off[i][j]: counterclockwise offset of point j seen from point i.
  std::vector<std::vector<Fraction>> off(n, std::vector<Fraction>(n));
  std::vector<std::vector<Fraction>> dist(n, std::vector<Fraction>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      off[i][j] = wrap(points[j] - points[i]);
      dist[i][j] = circ_dist(points[i], points[j]);
      a.set_E(i, j, i != j && dist[i][j] > third());
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (distinct({x, y, z}) && !a.E(x, y) && !a.E(y, z) && !a.E(x, z))
          a.set_B(x, y, z, dist[x][y] + dist[y][z] == dist[x][z]);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          if (distinct({p, q, r, s})) a.set_S(p, q, r, s, (off[p][q] < off[p][r]) != (off[p][s] < off[p][r]));
  return a;
}

// ---------------------------------------------------------------- axioms

namespace {

using Tuple = const int*;

bool induces_c4_p4_2k2(const EBSStructure& a, int x1, int x2, int x3, int x4) {
  const int xs[4] = {x1, x2, x3, x4};
  int deg[4] = {0, 0, 0, 0}, edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (a.E(xs[i], xs[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  const int lo = *std::min_element(deg, deg + 4), hi = *std::max_element(deg, deg + 4);
  if (edges == 4) return lo == 2 && hi == 2;
  if (edges == 3) return lo >= 1 && hi <= 2;
  if (edges == 2) return lo == 1 && hi == 1;
  return false;
}

bool independent3(const EBSStructure& a, int x, int y, int z) {
  return distinct({x, y, z}) && !a.E(x, y) && !a.E(y, z) && !a.E(x, z);
}

struct AxiomSpec {
  const char* id;
  int arity;
  bool distinct_only;
  std::function<bool(const EBSStructure&, Tuple)> matrix;
};

const std::vector<AxiomSpec>& axioms() {
  static const std::vector<AxiomSpec> list = {
      {"UE1", 2, false, [](auto& a, Tuple t) { return !a.E(t[0], t[0]) && a.E(t[0], t[1]) == a.E(t[1], t[0]); }},
      {"UE2", 3, false, [](auto& a, Tuple t) { return !(a.E(t[0], t[1]) && a.E(t[1], t[2]) && a.E(t[0], t[2])); }},
      {"UB1", 3, false, [](auto& a, Tuple t) { return a.B(t[0], t[1], t[2]) == a.B(t[2], t[1], t[0]); }},
      {"UB2", 3, false, [](auto& a, Tuple t) { return !a.B(t[0], t[1], t[2]) || !a.B(t[1], t[2], t[0]); }},
      {"UB3", 4, false,
       [](auto& a, Tuple t) {
         const int x = t[0], y = t[1], z = t[2], w = t[3];
         return !(a.B(x, y, z) && a.B(y, w, z)) || (a.B(x, w, z) && a.B(x, y, w));
       }},
      {"UB4", 4, false,
       [](auto& a, Tuple t) {
         const int x = t[0], y = t[1], z = t[2], w = t[3];
         // z = w makes the conclusion false for trivial reasons.
         return z == w || !(a.B(x, y, z) && a.B(x, y, w)) || a.B(x, z, w) || a.B(x, w, z);
       }},
      {"US1", 4, true,
       [](auto& a, Tuple t) {
         const int n = a.S(t[0], t[1], t[2], t[3]) + a.S(t[0], t[1], t[3], t[2]) + a.S(t[0], t[2], t[1], t[3]);
         return n == 1;
       }},
      {"US2", 4, false, [](auto& a, Tuple t) { return a.S(t[0], t[1], t[2], t[3]) == a.S(t[1], t[2], t[3], t[0]); }},
      {"US3", 4, false, [](auto& a, Tuple t) { return a.S(t[0], t[1], t[2], t[3]) == a.S(t[3], t[2], t[1], t[0]); }},
      {"US4", 5, false,
       [](auto& a, Tuple t) {
         return !(a.S(t[0], t[1], t[2], t[3]) && a.S(t[0], t[2], t[3], t[4])) || a.S(t[0], t[1], t[3], t[4]);
       }},
      {"UM1", 3, false,
       [](auto& a, Tuple t) {
         const int x = t[0], y = t[1], z = t[2];
         return independent3(a, x, y, z) == (a.B(x, y, z) || a.B(y, z, x) || a.B(z, x, y));
       }},
      {"UM2", 4, false,
       [](auto& a, Tuple t) {
         const int x = t[0], y = t[1], z = t[2], w = t[3];
         return !(a.B(x, y, z) && a.B(y, z, w) && !a.E(x, w)) || (a.B(x, y, w) && a.B(x, z, w));
       }},
      {"UM3", 4, false,
       [](auto& a, Tuple t) {
         const int x = t[0], y = t[1], z = t[2], w = t[3];
         return !(a.B(x, y, z) && a.E(y, w)) || a.E(x, w) || a.E(z, w);
       }},
      {"UM4", 4, false,
       [](auto& a, Tuple t) {
         const int x = t[0], y = t[1], z = t[2], w = t[3];
         return !(a.B(x, y, z) && a.E(x, w) && a.E(z, w)) || a.E(y, w);
       }},
      {"UM5", 5, false,
       [](auto& a, Tuple t) {
         return !(a.S(t[0], t[1], t[2], t[3]) && a.E(t[0], t[3]) && a.B(t[2], t[4], t[3])) ||
                a.S(t[0], t[1], t[2], t[4]);
       }},
      {"UM6", 5, false,
       [](auto& a, Tuple t) {
         const int y1 = t[0], y2 = t[1], x = t[2], z1 = t[3], z2 = t[4];
         return !(a.B(y1, y2, x) && a.B(x, z1, z2) && a.E(y1, z2)) || a.S(y1, y2, z1, z2);
       }},
      {"UM7", 4, false,
       [](auto& a, Tuple t) {
         if (!distinct({t[0], t[1], t[2], t[3]}) || !induces_c4_p4_2k2(a, t[0], t[1], t[2], t[3])) return true;
         return !a.S(t[0], t[1], t[2], t[3]) || (a.E(t[0], t[2]) && a.E(t[1], t[3]));
       }},
      {"UM8", 4, false,
       [](auto& a, Tuple t) {
         const int x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3];
         if (!independent3(a, x1, x2, x3) || x4 == x1 || x4 == x2 || x4 == x3) return true;
         const bool b2 = a.B(x1, x2, x3), b4 = a.B(x1, x4, x3);
         return a.S(x1, x2, x3, x4) == ((b2 && !b4) || (b4 && !b2));
       }},
  };
  return list;
}

}  // namespace

AxiomReport check_universal_axioms(const EBSStructure& a, std::size_t limit) {
  AxiomReport report;
  const int n = a.size();
  for (const auto& ax : axioms()) {
    std::vector<int> t(static_cast<std::size_t>(ax.arity), 0);
    std::size_t found = 0;
    if (n == 0) continue;
    while (true) {
      bool skip = false;
      if (ax.distinct_only)
        for (int i = 0; i < ax.arity && !skip; ++i)
          for (int j = i + 1; j < ax.arity && !skip; ++j) skip = t[i] == t[j];
      if (!skip && !ax.matrix(a, t.data())) {
        report.violations.push_back({ax.id, t});
        if (++found >= limit) break;
      }
      int i = ax.arity - 1;
      while (i >= 0 && t[i] == n - 1) t[i--] = 0;
      if (i < 0) break;
      ++t[i];
    }
  }
  return report;
}

bool violation_holds(const EBSStructure& a, const AxiomViolation& v) {
  for (const auto& ax : axioms()) {
    if (v.axiom != ax.id) continue;
    if (static_cast<int>(v.witness.size()) != ax.arity) return false;
    for (int x : v.witness)
      if (x < 0 || x >= a.size()) return false;
    return !ax.matrix(a, v.witness.data());
  }
  return false;
}

// ------------------------------------------------------------ definability

namespace {

struct Cell {
  Fraction lo, width, mid;
};

// Open cells of the circle cut at every point and at every point +- 1/3.
// The type of a new point over `points` is constant on each cell.
std::vector<Cell> arrangement_cells(std::span<const Fraction> points) {
  std::set<Fraction> cuts;
  for (const auto& p : points) {
    cuts.insert(p);
    cuts.insert(wrap(p + third()));
    cuts.insert(wrap(p - third()));
  }
  std::vector<Cell> cells;
  if (cuts.empty()) {
    cells.push_back({Fraction(0), Fraction(1), Fraction(0)});
    return cells;
  }
  std::vector<Fraction> c(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Fraction& lo = c[i];
    const Fraction hi = i + 1 < c.size() ? c[i + 1] : c[0] + Fraction(1);
    const Fraction width = hi - lo;
    cells.push_back({lo, width, wrap(lo + width / Fraction(2))});
  }
  return cells;
}

// A structure element or an outside probe point; relations with probes are
// computed from the geometry, relations among elements are read from `a`.
struct Universe {
  const EBSStructure& a;
  std::span<const Fraction> points;
  std::vector<Fraction> probes;

  int elements() const { return a.size(); }
  int total() const { return a.size() + static_cast<int>(probes.size()); }
  const Fraction& pos(int i) const { return i < a.size() ? points[i] : probes[i - a.size()]; }
  bool real(std::initializer_list<int> xs) const {
    return std::all_of(xs.begin(), xs.end(), [&](int x) { return x < a.size(); });
  }
  bool E(int x, int y) const { return real({x, y}) ? a.E(x, y) : x != y && geo_E(pos(x), pos(y)); }
  bool B(int x, int y, int z) const { return real({x, y, z}) ? a.B(x, y, z) : geo_B(pos(x), pos(y), pos(z)); }
};

bool s_case_table(const Universe& u, const int t[4], bool existential_c4) {
  const int x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3];
  const EBSStructure& a = u.a;
  if (a.B(x1, x2, x3) && !a.B(x1, x4, x3)) return true;
  if (a.E(x1, x3) && a.E(x2, x4) && !a.E(x1, x2) && !a.E(x2, x3) && !a.E(x3, x4)) return true;
  const bool c4 = a.E(x1, x3) && a.E(x3, x4) && a.E(x4, x2) && a.E(x2, x1);
  if (!c4) return false;
  if (existential_c4) {
    bool y1 = false, y2 = false;
    for (int y = 0; y < u.total() && !(y1 && y2); ++y) {
      y1 = y1 || (u.B(x4, x1, y) && u.B(y, x2, x3));
      y2 = y2 || (u.B(y, x4, x1) && u.B(x2, x3, y));
    }
    return y1 && y2;
  }
  for (int y = 0; y < u.total(); ++y) {
    if (u.E(y, x1) || u.E(y, x2) || u.E(y, x3) || u.E(y, x4)) continue;
    if (y == x1 || y == x2 || y == x3 || y == x4) continue;
    if (!((u.B(x4, x1, y) && u.B(y, x2, x3)) || (u.B(y, x4, x1) && u.B(x2, x3, y)))) return false;
  }
  return true;
}

// The eight images of a 4-tuple under rotations and reflection.
std::array<std::array<int, 4>, 8> dihedral(const int t[4]) {
  std::array<std::array<int, 4>, 8> out;
  for (int r = 0; r < 4; ++r) {
    for (int i = 0; i < 4; ++i) out[r][i] = t[(i + r) % 4];
    for (int i = 0; i < 4; ++i) out[4 + r][i] = out[r][3 - i];
  }
  return out;
}

}  // namespace

bool check_definability(const EBSStructure& a, std::span<const Fraction> points) {
  const int n = a.size();
  if (static_cast<int>(points.size()) != n) return false;
  check_point_set(points);
  Universe u{a, points, {}};
  for (const auto& c : arrangement_cells(points)) u.probes.push_back(c.mid);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!independent3(a, x, y, z)) {
          if (a.B(x, y, z)) return false;
          continue;
        }
        bool universal = true, ex_u = false, ex_v = false;
        for (int v = 0; v < u.total(); ++v) {
          if (u.E(y, v) && !u.E(x, v) && !u.E(z, v)) universal = false;
          ex_u = ex_u || (u.E(z, v) && !u.E(y, v) && !u.E(x, v));
          ex_v = ex_v || (u.E(x, v) && !u.E(y, v) && !u.E(z, v));
        }
        if (a.B(x, y, z) != universal || a.B(x, y, z) != (ex_u && ex_v)) return false;
      }

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (!distinct({p, q, r, s})) {
            if (a.S(p, q, r, s)) return false;
            continue;
          }
          const int t[4] = {p, q, r, s};
          bool by_exists = false, by_forall = false;
          for (const auto& img : dihedral(t)) {
            by_exists = by_exists || s_case_table(u, img.data(), true);
            by_forall = by_forall || s_case_table(u, img.data(), false);
          }
          if (a.S(p, q, r, s) != by_exists || a.S(p, q, r, s) != by_forall) return false;
        }
  return true;
}

bool sep(const EBSStructure& a, std::span<const int> xs) {
  const std::size_t m = xs.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l)
          if (!a.S(xs[i], xs[j], xs[k], xs[l])) return false;
  return true;
}

// ------------------------------------------------------ partition, bounds

XYZPartition xyz_partition(const EBSStructure& a, const VertexSet& sub, int v) {
  if (std::ranges::find(sub, v) != sub.end()) throw PreconditionError("v must lie outside the substructure");
  XYZPartition part;
  VertexSet rest;
  for (int x : sub) (a.E(x, v) ? part.X : rest).push_back(x);
  auto related = [&](int p, int q) { return p == q || a.B(p, q, v) || a.B(q, p, v); };
  std::vector<VertexSet> classes;
  for (int x : rest) {
    auto it = std::ranges::find_if(classes, [&](const VertexSet& c) { return related(c.front(), x); });
    if (it == classes.end())
      classes.push_back({x});
    else
      it->push_back(x);
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      for (int p : classes[i])
        for (int q : classes[j])
          if (related(p, q) != (i == j))
            throw PreconditionError("~_v is not an equivalence relation",
                                    std::to_string(p) + " " + std::to_string(q));
  if (classes.size() > 2) throw PreconditionError("~_v has more than two classes");
  if (!classes.empty()) part.Y = classes[0];
  if (classes.size() > 1) part.Z = classes[1];
  return part;
}

BBounds b_bounds(const EBSStructure& a, const VertexSet& u) {
  if (u.empty()) throw PreconditionError("B-bounds of an empty set");
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (a.E(u[i], u[j]))
        throw PreconditionError("set is not independent", std::to_string(u[i]) + " " + std::to_string(u[j]));
  if (u.size() == 1) return {u[0], u[0], {u[0]}};
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      bool spans = true;
      for (int c : u)
        if (c != u[i] && c != u[j] && !a.B(u[i], c, u[j])) spans = false;
      if (spans) pairs.emplace_back(std::min(u[i], u[j]), std::max(u[i], u[j]));
    }
  if (pairs.size() != 1) throw PreconditionError("no unique pair of B-bounds");
  const auto [s, t] = pairs.front();
  auto less = [&](int c, int d) {
    if (c == d) return false;
    if (c == s || d == t) return true;
    if (d == s || c == t) return false;
    return a.B(s, c, d) && a.B(c, d, t);
  };
  for (int c : u)
    for (int d : u) {
      if (c != d && less(c, d) == less(d, c)) throw PreconditionError("<_st is not total and antisymmetric");
      for (int e : u)
        if (less(c, d) && less(d, e) && !less(c, e)) throw PreconditionError("<_st is not transitive");
    }
  BBounds out{s, t, u};
  std::ranges::sort(out.order, less);
  return out;
}

// ------------------------------------------------- one-point extensions

namespace {

// Atomic formula over element indices; `v` marks the new element.
struct Atom {
  char rel;  // 'E', 'B', 'S'
  std::array<int, 4> args;
  bool value;
};

struct Labeled {
  ExtensionCase c;
  std::vector<Atom> atoms;  // formulas of the item that mention v, plus E/non-E
};

std::vector<Atom> sep_atoms(std::span<const int> xs) {
  std::vector<Atom> out;
  const std::size_t m = xs.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) out.push_back({'S', {xs[i], xs[j], xs[k], xs[l]}, true});
  return out;
}

bool holds(const EBSStructure& a, const Atom& t) {
  const auto& g = t.args;
  bool v = false;
  if (t.rel == 'E') v = a.E(g[0], g[1]);
  if (t.rel == 'B') v = a.B(g[0], g[1], g[2]);
  if (t.rel == 'S') v = a.S(g[0], g[1], g[2], g[3]);
  return v == t.value;
}

bool all_hold(const EBSStructure& a, const std::vector<Atom>& atoms) {
  return std::ranges::all_of(atoms, [&](const Atom& t) { return holds(a, t); });
}

// Every atom with v among sub + {v}, with its value in a.
std::vector<Atom> full_type(const EBSStructure& a, const VertexSet& sub, int v) {
  VertexSet all = sub;
  all.push_back(v);
  std::vector<Atom> out;
  for (int x : sub) out.push_back({'E', {v, x, 0, 0}, a.E(v, x)});
  for (int x : all)
    for (int y : all)
      for (int z : all)
        if (distinct({x, y, z}) && (x == v || y == v || z == v))
          out.push_back({'B', {x, y, z, 0}, a.B(x, y, z)});
  for (int p : all)
    for (int q : all)
      for (int r : all)
        for (int s : all)
          if (distinct({p, q, r, s}) && (p == v || q == v || r == v || s == v))
            out.push_back({'S', {p, q, r, s}, a.S(p, q, r, s)});
  return out;
}

// Orientations of a B-bound pair: one for singletons, two otherwise.
std::vector<std::pair<int, int>> labelings(const EBSStructure& a, const VertexSet& cls) {
  if (cls.empty()) return {{-1, -1}};
  auto bb = b_bounds(a, cls);
  if (bb.s == bb.t) return {{bb.s, bb.s}};
  return {{bb.s, bb.t}, {bb.t, bb.s}};
}

void lemma7(const EBSStructure& a, const VertexSet& sub, int v, std::vector<Labeled>& out) {
  const auto bb = b_bounds(a, sub);
  const int u = bb.s, w = bb.t;
  const auto& ord = bb.order;
  auto base = [&](int item) {
    ExtensionCase c;
    c.lemma = 7;
    c.item = item;
    c.u = u;
    c.w = w;
    return c;
  };
  if (a.E(u, v) && a.E(w, v))
    out.push_back({base(1), {{'E', {u, v}, true}, {'E', {w, v}, true}}});
  if (a.B(v, u, w)) out.push_back({base(2), {{'B', {v, u, w}, true}}});
  if (a.B(u, w, v)) out.push_back({base(2), {{'B', {u, w, v}, true}}});
  for (std::size_t i = 0; i + 1 < ord.size(); ++i) {
    const int l = ord[i], r = ord[i + 1];
    if (a.B(l, v, r)) {
      auto c = base(2);
      c.a = l;
      c.b = r;
      out.push_back({c, {{'B', {l, v, r}, true}}});
    }
    // Item 3: the neighbours of v are an initial segment ending at l.
    if (a.E(u, v) && a.E(l, v) && !a.E(r, v) && (r == w || a.B(r, w, v))) {
      auto c = base(3);
      c.a = l;
      c.b = r;
      std::vector<Atom> atoms = {{'E', {u, v}, true}, {'E', {l, v}, true}, {'E', {r, v}, false}};
      if (r != w) atoms.push_back({'B', {r, w, v}, true});
      out.push_back({c, atoms});
    }
    if (a.E(w, v) && a.E(r, v) && !a.E(l, v) && (l == u || a.B(v, u, l))) {
      auto c = base(4);
      c.a = l;
      c.b = r;
      std::vector<Atom> atoms = {{'E', {w, v}, true}, {'E', {r, v}, true}, {'E', {l, v}, false}};
      if (l != u) atoms.push_back({'B', {v, u, l}, true});
      out.push_back({c, atoms});
    }
  }
}

// Every listed triple x_i, y_j, z_k spans an edge.
bool triples_have_edges(const EBSStructure& a, std::initializer_list<int> xs, std::initializer_list<int> ys,
                        std::initializer_list<int> zs) {
  for (int x : xs)
    for (int y : ys)
      for (int z : zs)
        if (!a.E(x, y) && !a.E(y, z) && !a.E(x, z)) return false;
  return true;
}

void lemmas_10_to_12(const EBSStructure& a, const XYZPartition& p, int v, std::vector<Labeled>& out) {
  const bool X = !p.X.empty(), Y = !p.Y.empty(), Z = !p.Z.empty();
  // With Z empty the remaining class plays the role of Y.
  const VertexSet& ys = Y ? p.Y : p.Z;
  const VertexSet& zs = Y ? p.Z : p.Y;
  const bool bigX = p.X.size() >= 2, bigY = ys.size() >= 2, bigZ = zs.size() >= 2;
  for (auto [x1, x2] : labelings(a, p.X))
    for (auto [y1, y2] : labelings(a, ys))
      for (auto [z1, z2] : labelings(a, zs)) {
        ExtensionCase c;
        c.x1 = x1, c.y1 = y1, c.z1 = z1;
        if (bigX) c.x2 = x2;
        if (bigY) c.y2 = y2;
        if (bigZ) c.z2 = z2;
        std::vector<Atom> at;
        for (int x : {c.x1, c.x2})
          if (x >= 0) at.push_back({'E', {x, v}, true});
        for (int y : {c.y1, c.y2, c.z1, c.z2})
          if (y >= 0) at.push_back({'E', {y, v}, false});
        auto add = [&](std::initializer_list<Atom> more) { at.insert(at.end(), more); };
        auto add_sep = [&](std::initializer_list<int> xs) {
          auto s = sep_atoms(std::vector<int>(xs));
          at.insert(at.end(), s.begin(), s.end());
        };
        bool extra = true;
        if (!X) {
          c.lemma = 10;
          if (!bigY && bigZ) {
            c.item = 1;
            add({{'E', {y1, z2}, true}, {'B', {v, z1, z2}, true}, {'S', {y1, v, z1, z2}, true}});
          } else if (bigY && !bigZ) {
            c.item = 2;
            add({{'E', {y1, z1}, true}, {'B', {y1, y2, v}, true}, {'S', {y2, v, z1, y1}, true}});
          } else if (bigY && bigZ) {
            c.item = 3;
            add({{'E', {y1, z2}, true}, {'B', {y1, y2, v}, true}, {'B', {v, z1, z2}, true}});
            add_sep({y1, y2, v, z1, z2});
          } else {
            continue;
          }
        } else if (!Z || !Y) {
          c.lemma = 11;
          if (bigX && !bigY) {
            c.item = 1;
            add({{'E', {x1, y1}, true}, {'S', {y1, v, x1, x2}, true}});
          } else if (!bigX && bigY) {
            c.item = 2;
            add({{'E', {x1, y2}, true}, {'B', {y1, y2, v}, true}});
          } else if (bigX && bigY) {
            c.item = 3;
            add({{'B', {y1, y2, v}, true}});
            add_sep({x1, x2, y1, y2, v});
          } else {
            continue;
          }
        } else {
          c.lemma = 12;
          const int pattern = (bigX ? 4 : 0) | (bigY ? 2 : 0) | (bigZ ? 1 : 0);
          switch (pattern) {
            case 0:
              c.item = 1;
              add({{'S', {x1, y1, v, z1}, true}});
              extra = triples_have_edges(a, {x1}, {y1}, {z1});
              break;
            case 4:
              c.item = 2;
              add_sep({x1, x2, y1, v, z1});
              extra = triples_have_edges(a, {x1, x2}, {y1}, {z1});
              break;
            case 2:
              c.item = 3;
              add({{'B', {y1, y2, v}, true}});
              add_sep({x1, y1, y2, v, z1});
              extra = triples_have_edges(a, {x1}, {y1, y2}, {z1});
              break;
            case 1:
              c.item = 4;
              add({{'B', {v, z1, z2}, true}});
              add_sep({x1, y1, v, z1, z2});
              extra = triples_have_edges(a, {x1}, {y1}, {z1, z2});
              break;
            case 6:
              c.item = 5;
              add({{'B', {y1, y2, v}, true}});
              add_sep({x1, x2, y1, y2, v, z1});
              extra = triples_have_edges(a, {x1, x2}, {y1, y2}, {z1});
              break;
            case 5:
              c.item = 6;
              add({{'B', {v, z1, z2}, true}});
              add_sep({x1, x2, y1, v, z1, z2});
              extra = triples_have_edges(a, {x1, x2}, {y1}, {z1, z2});
              break;
            case 3:
              c.item = 7;
              add({{'B', {y1, y2, v}, true}, {'B', {v, z1, z2}, true}});
              add_sep({x1, y1, y2, v, z1, z2});
              extra = triples_have_edges(a, {x1}, {y1, y2}, {z1, z2});
              break;
            default:
              c.item = 8;
              add({{'B', {y1, y2, v}, true}, {'B', {v, z1, z2}, true}});
              add_sep({x1, x2, y1, y2, v, z1, z2});
              extra = triples_have_edges(a, {x1, x2}, {y1, y2}, {z1, z2});
              break;
          }
        }
        if (extra && all_hold(a, at)) out.push_back({c, at});
      }
}

std::vector<Labeled> labeled_cases(const EBSStructure& a, const VertexSet& sub, int v) {
  if (std::ranges::find(sub, v) != sub.end()) throw PreconditionError("v must lie outside the substructure");
  std::vector<Labeled> out;
  bool independent = true;
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = i + 1; j < sub.size(); ++j) independent = independent && !a.E(sub[i], sub[j]);
  if (sub.size() <= 1 || (sub.size() == 2 && !independent)) {
    out.push_back({ExtensionCase{}, full_type(a, sub, v)});
    return out;
  }
  if (independent) {
    lemma7(a, sub, v, out);
    return out;
  }
  lemmas_10_to_12(a, xyz_partition(a, sub, v), v, out);
  return out;
}

}  // namespace

std::string ExtensionCase::describe() const {
  std::ostringstream os;
  if (lemma == 0) return "degenerate (full type)";
  os << "lemma " << lemma << " item " << item;
  auto put = [&](const char* name, int x) {
    if (x >= 0) os << ' ' << name << '=' << x;
  };
  put("u", u);
  put("w", w);
  put("a", a);
  put("b", b);
  put("x1", x1);
  put("x2", x2);
  put("y1", y1);
  put("y2", y2);
  put("z1", z1);
  put("z2", z2);
  return os.str();
}

std::vector<ExtensionCase> matching_cases(const EBSStructure& a, const VertexSet& sub, int v) {
  std::vector<ExtensionCase> out;
  for (auto& l : labeled_cases(a, sub, v)) {
    const bool seen = std::ranges::any_of(out, [&](const ExtensionCase& c) { return c.item == l.c.item; });
    if (!seen) out.push_back(l.c);
  }
  return out;
}

ExtensionCase classify_one_point_extension(const EBSStructure& a, const VertexSet& sub, int v) {
  auto cases = matching_cases(a, sub, v);
  if (cases.size() != 1) {
    std::string what = std::to_string(cases.size()) + " extension cases match for v=" + std::to_string(v);
    for (const auto& c : cases) what += "; " + c.describe();
    throw InternalError(what);
  }
  return cases.front();
}

CircleRepresentation incremental_embed(const EBSStructure& a) {
  if (auto r = check_universal_axioms(a, 1); !r.ok()) {
    std::string w;
    for (int x : r.violations.front().witness) w += std::to_string(x) + " ";
    throw PreconditionError("structure violates " + r.violations.front().axiom, w);
  }
  const int n = a.size();
  CircleRepresentation rep;
  auto geo = [&](const Atom& t, int v, const Fraction& cand) {
    auto pos = [&](int i) -> const Fraction& { return i == v ? cand : rep.points[i]; };
    const auto& g = t.args;
    bool val = false;
    if (t.rel == 'E') val = g[0] != g[1] && geo_E(pos(g[0]), pos(g[1]));
    if (t.rel == 'B') val = geo_B(pos(g[0]), pos(g[1]), pos(g[2]));
    if (t.rel == 'S') val = geo_S(pos(g[0]), pos(g[1]), pos(g[2]), pos(g[3]));
    return val == t.value;
  };
  for (int v = 0; v < n; ++v) {
    VertexSet sub(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) sub[i] = i;
    auto cases = labeled_cases(a, sub, v);
    if (cases.empty()) throw InternalError("no extension case matches element " + std::to_string(v));
    const Labeled& chosen = cases.front();

    std::optional<Cell> best;
    for (const auto& cell : arrangement_cells(rep.points)) {
      if (!std::ranges::all_of(chosen.atoms, [&](const Atom& t) { return geo(t, v, cell.mid); })) continue;
      if (!best || cell.width > best->width) best = cell;
    }
    if (!best)
      throw InternalError("empty admissible region for element " + std::to_string(v) + " (" + chosen.c.describe() + ")");
    const Fraction p = best->mid;
    for (const auto& t : full_type(a, sub, v))
      if (!geo(t, v, p))
        throw InternalError("element " + std::to_string(v) + " placed by " + chosen.c.describe() +
                            " has the wrong type");
    rep.points.push_back(p);
  }
  if (!(ebs_from_points(rep.points) == a)) throw InternalError("embedded points do not reproduce the structure");
  return rep;
}

}  // namespace circ3
