#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circ3 {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex; the relation is kept
/// symmetric and irreflexive by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const Bits& neighbours(int v) const { return rows_[v]; }
  int degree(int v) const { return static_cast<int>(rows_[v].count()); }

  std::size_t edge_count() const;
  // Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  // Appends a vertex adjacent to exactly `nbrs`; returns its index.
  int add_vertex(const VertexSet& nbrs = {});
  // Removes every edge incident to v (the vertex itself stays).
  void isolate(int v);

  // Subgraph induced on `vs`, relabelled 0..|vs|-1 in the given order.
  Graph induced(std::span<const int> vs) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bits> rows_;
};

Graph complement(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

// Lowest-index greedy extension of an independent seed to a maximal
// independent set. Throws PreconditionError if the seed is not independent.
VertexSet maximal_independent_superset(const Graph& g, const VertexSet& seed);

// Unordered non-adjacent pairs {a,b} (a < b) without a common neighbour,
// in lexicographic order.
std::vector<Edge> common_neighbour_deficiencies(const Graph& g);

bool is_triangle_free(const Graph& g);

// Brute-force isomorphism test with degree-based pruning; returns the map
// from vertices of `g` to vertices of `h` if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);
inline bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

// Edge-list text format: first non-comment line is n, then one "u v" per
// line; '#' starts a comment line, duplicates are ignored.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

// Common named graphs.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complete_bipartite(int a, int b);

Bits to_bits(int n, const VertexSet& s);
VertexSet to_set(const Bits& b);

}  // namespace circ3
