#pragma once

#include "circ3/circular_arc.hh"
#include "circ3/fraction.hh"
#include "circ3/graph.hh"
#include "circ3/representation.hh"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace circ3 {

// Homomorphism g -> h by backtracking with neighbourhood pruning.
std::optional<std::vector<int>> hom_exists(const Graph& g, const Graph& h);
bool verify_hom(const Graph& g, const Graph& h, const std::vector<int>& map);

int chromatic_number(const Graph& g);

// Coprime (p,q) with 2 <= p <= n, 1 <= q <= p/2 and chi-1 < p/q <= chi,
// ascending by value.
std::vector<CircularClique> chi_c_candidates(int n, int chi);

// Circular chromatic number; 1 for graphs without edges.
Fraction chi_c_exact(const Graph& g);

enum class Route { Hom, Spanning, Brandt, Complement, All };
std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

struct HomCertificate {
  CircularClique target;
  std::vector<int> map;
};
struct FreeSpanningSupergraph {
  Graph graph;
};
struct BrandtSupergraph {
  Graph graph;
};
// Spanning subgraph of the complement together with its arc model.
struct ComplementArcSubgraph {
  Graph graph;
  ArcModel model;
};
struct Refutation {
  std::string descriptor;
};

using Certificate = std::variant<HomCertificate, FreeSpanningSupergraph, BrandtSupergraph, ComplementArcSubgraph, Refutation>;

struct ChiCVerdict {
  Route route;
  bool below_three;
  Certificate certificate;
};

struct SizeGuard {
  int exponential = 10;  // Spanning, Brandt, Complement
  int hom = 20;
};

// Decision of chi_c(g) < 3 along one route. Route::All runs Hom, Spanning and
// Brandt, throws InternalError unless they agree, and returns the Hom verdict.
ChiCVerdict chi_c_below_three(const Graph& g, Route route, const SizeGuard& guard = {});

// Re-checks a certificate without reusing the search that produced it.
bool verify_certificate(const Graph& g, const ChiCVerdict& v);

struct AuditReport {
  std::vector<ChiCVerdict> verdicts;  // Hom, Spanning, Brandt, Complement
  bool below_three;
};

// Runs every route, verifies every positive certificate and throws
// InternalError if the routes disagree.
AuditReport equivalence_audit(const Graph& g, const SizeGuard& guard = {});

}  // namespace circ3
