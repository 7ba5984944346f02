#pragma once

#include "circ3/fraction.hh"
#include "circ3/graph.hh"

#include <random>
#include <set>
#include <vector>

namespace circ3::testing {

inline Graph from_edges(int n, std::initializer_list<Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Fraction fr(long long p, long long q) { return Fraction(Fraction::Int(p), Fraction::Int(q)); }

// Distinct points k/den in [0,1), never at distance exactly 1/3.
inline std::vector<Fraction> random_points(std::mt19937& rng, int n, int den = 90) {
  std::vector<Fraction> pts;
  std::uniform_int_distribution<int> pick(0, den - 1);
  while (static_cast<int>(pts.size()) < n) {
    Fraction p = fr(pick(rng), den);
    bool ok = true;
    for (const auto& q : pts) ok = ok && q != p && circ_dist(p, q) != fr(1, 3);
    if (ok) pts.push_back(p);
  }
  return pts;
}

}  // namespace circ3::testing
