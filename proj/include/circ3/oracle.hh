#pragma once

// Brute-force reference implementations. Nothing here calls into the search
// code of the other modules; adjacency is re-read into plain matrices.

#include "circ3/fraction.hh"
#include "circ3/graph.hh"
#include "circ3/obstructions.hh"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace circ3::oracle {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency(const Graph& g);

// Tries every injective map of the pattern into g.
bool induced(const Graph& g, const Graph& pattern);
bool induced(const Graph& g, Pattern p);
// Same, for a not necessarily induced copy of H10-v. Guard: n <= 10.
bool subgraph_h10_minus_v(const Graph& g);

// Whether any map V(g) -> {0..p-1} is a homomorphism into K_{p,q}. Maps are
// visited in lexicographic order; once a prefix already breaks an edge, the
// whole block of maps sharing that prefix is skipped.
bool hom_to_circular_clique(const Graph& g, int p, int q);

// min p/q over coprime p <= n with g -> K_{p,q}. Throws InputError on graphs
// without edges.
Fraction chi_c(const Graph& g);

// Tries every set of added edges, testing each result with induced().
// Guard: n <= 8.
bool spanning_free(const Graph& g);

// Graph number `code` on n vertices: bit i of the code is the i-th pair in
// the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
struct SweepCursor {
  int n;
  std::uint64_t code;
};
std::uint64_t graph_count(int n);
Graph graph_from_code(int n, std::uint64_t code);

// Every labeled graph on n <= 7 vertices in code order.
void all_graphs(int n, const std::function<void(const Graph&)>& f);

}  // namespace circ3::oracle
