#pragma once

#include "circ3/graph.hh"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circ3 {

/// The four minimal obstructions for induced subgraphs of the generic
/// circular triangle-free graph.
enum class Pattern { K3, K1_2K2, K1_C5, C6 };

inline constexpr std::array<Pattern, 4> kAllPatterns = {Pattern::K3, Pattern::K1_2K2, Pattern::K1_C5, Pattern::C6};

std::string_view pattern_name(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view name);

/// An induced copy of `kind` in some graph: `vertices[i]` plays the role of
/// vertex i of `pattern_graph(kind)`.
struct ObstructionWitness {
  Pattern kind;
  std::vector<int> vertices;

  friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

// Canonical labelings:
//   K3      triangle 0,1,2
//   K1_2K2  0 isolated, edges 1-2 and 3-4
//   K1_C5   0 isolated, cycle 1-2-3-4-5
//   C6      cycle 0-1-2-3-4-5
const Graph& pattern_graph(Pattern p);

// Petersen graph: outer cycle 0..4, spokes i~i+5, inner pentagram
// 5+i ~ 5+((i+2) mod 5).
const Graph& petersen_graph();
// Petersen graph with vertex 9 deleted (9 vertices, 12 edges; vertices 4, 6
// and 7 have degree 2).
const Graph& petersen_minus_vertex();

// Lexicographically smallest vertex tuple realizing `p` as an induced
// subgraph, if any.
std::optional<ObstructionWitness> find_pattern(const Graph& g, Pattern p);

// None iff g is {K3, K1+2K2, K1+C5, C6}-free. Patterns are tried in the
// order K3, K1+2K2, K1+C5, C6 and the first hit is reported.
std::optional<ObstructionWitness> classify_free(const Graph& g);
inline bool is_free(const Graph& g) { return !classify_free(g).has_value(); }

// Independent re-check: the induced subgraph on the witness vertices equals
// the pattern under the witness labeling, and is isomorphic to it.
bool verify_witness(const Graph& g, const ObstructionWitness& w);

// Injective edge-preserving map from H10-v into g (not necessarily induced).
std::optional<std::vector<int>> find_subgraph_h10_minus_v(const Graph& g);
inline bool has_subgraph_h10_minus_v(const Graph& g) { return find_subgraph_h10_minus_v(g).has_value(); }

bool is_maximal_triangle_free(const Graph& g);

std::string describe(const ObstructionWitness& w);

}  // namespace circ3
