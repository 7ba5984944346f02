#pragma once

#include "circ3/fraction.hh"
#include "circ3/graph.hh"
#include "circ3/obstructions.hh"

#include <optional>
#include <vector>

namespace circ3 {

struct CircularClique {
  int p = 2, q = 1;
  friend bool operator==(const CircularClique&, const CircularClique&) = default;
};

// K_{p,q}: vertices 0..p-1, ij an edge iff q <= |i-j| <= p-q. Requires
// gcd(p,q) = 1 and p >= 2q >= 2.
Graph circular_clique(int p, int q);
inline Graph circular_clique(CircularClique c) { return circular_clique(c.p, c.q); }

struct FullHom {
  int k = 1;  // target K_{3k-1,k}
  std::vector<int> map;
};

// Full homomorphism (u~v iff f(u)~f(v)) into K_{3k-1,k}, by backtracking with
// f(0) fixed to 0 (the target is vertex-transitive).
std::optional<FullHom> full_hom_search(const Graph& g, int k);
bool verify_full_hom(const Graph& g, const FullHom& h);

struct CircleRepresentation {
  std::vector<Fraction> points;  // in [0,1), one per vertex
};

enum class RepresentationOutcome { Represented, Obstructed, CapExhausted };

struct RepresentationResult {
  RepresentationOutcome outcome;
  CircleRepresentation rep;                   // when Represented
  int k = 0;                                  // clique index used
  std::optional<ObstructionWitness> obstruction;  // when Obstructed
  int cap = 0;
};

// Places the vertices of a full homomorphism image: preimages of clique
// vertex i go to i/(3k-1) + t*delta, t = 0,1,...
CircleRepresentation place_full_hom(const FullHom& h);

// cap <= 0 means: number of vertices of the maximal triangle-free extension.
RepresentationResult find_circle_representation(const Graph& g, int cap = 0);

// Pairwise distinct points in [0,1), no distance exactly 1/3, and adjacency
// iff circular distance > 1/3.
bool verify_representation(const Graph& g, const CircleRepresentation& r);

}  // namespace circ3
