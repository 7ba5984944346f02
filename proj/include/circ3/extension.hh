#pragma once

#include "circ3/graph.hh"
#include "circ3/obstructions.hh"

#include <variant>
#include <vector>

namespace circ3 {

// New vertex appended, adjacent to exactly `independent_set`.
struct AddVertex {
  int vertex;
  VertexSet independent_set;
  friend bool operator==(const AddVertex&, const AddVertex&) = default;
};

struct AddEdge {
  int u, v;
  friend bool operator==(const AddEdge&, const AddEdge&) = default;
};

// `vertex` was set aside because N(vertex) is contained in N(dominator).
struct RemoveDominatedVertex {
  int vertex, dominator;
  friend bool operator==(const RemoveDominatedVertex&, const RemoveDominatedVertex&) = default;
};

// `vertex` is put back with exactly the current neighbourhood of `twin`.
struct ReinsertTwin {
  int vertex, twin;
  friend bool operator==(const ReinsertTwin&, const ReinsertTwin&) = default;
};

using ExtensionStep = std::variant<AddVertex, AddEdge, RemoveDominatedVertex, ReinsertTwin>;

struct ExtensionTrace {
  std::vector<ExtensionStep> steps;
};

struct ExtensionResult {
  Graph graph;
  ExtensionTrace trace;
};

// Replays a trace on `start`. A removed vertex loses all its edges until it is
// reinserted. Throws InputError on an inconsistent trace.
Graph replay(const Graph& start, const ExtensionTrace& trace);

// Adds a vertex adjacent to exactly `i`, a maximal independent set of the free
// graph `g`; the result is free as well (checked).
Graph extend_one_vertex(const Graph& g, const VertexSet& i);

// Vertex-addition extension of a free graph to a free maximal triangle-free
// graph containing g induced on 0..n-1. Deficient pairs are repaired in
// lexicographic order.
ExtensionResult to_maximal_triangle_free(const Graph& g);

enum class EdgeAdditionOutcome { CreatesTriangle, StaysFree };

// For free, point-incomparable g and distinct non-adjacent x, y: either x, y
// have a common neighbour or g + xy is still free. Throws InternalError if
// neither holds.
EdgeAdditionOutcome check_edge_addition(const Graph& g, int x, int y);

bool is_point_incomparable(const Graph& g);

// Same-vertex-set extension of a free graph to a free maximal triangle-free
// supergraph (dominated vertices set aside first, then free-preserving edges
// in lexicographic order, then twins reinserted in reverse).
ExtensionResult spanning_free_extension(const Graph& g);

}  // namespace circ3
