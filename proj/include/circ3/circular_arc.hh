#pragma once

#include "circ3/fraction.hh"
#include "circ3/graph.hh"
#include "circ3/obstructions.hh"

#include <optional>
#include <vector>

namespace circ3 {

// Closed arc running counterclockwise from `start` to `end` on a circle of
// circumference 3; both endpoints are in [0,3).
struct Arc {
  Fraction start, end;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ArcModel {
  static constexpr int circumference = 3;
  std::vector<Arc> arcs;
};

// True iff x lies on the closed arc a.
bool arc_contains(const Arc& a, const Fraction& x);
bool arcs_intersect(const Arc& a, const Arc& b);

// None iff the complement of g is free; otherwise an obstruction in the
// complement (same vertex numbers).
std::optional<ObstructionWitness> is_uca_alpha_lt_3(const Graph& g);

// Unit arcs [3t - 1/2, 3t + 1/2] for a circle representation t of the complement.
std::optional<ArcModel> arc_model(const Graph& g);

// Unit length, pairwise distinct endpoints, intersection graph equal to g,
// and the Helly property. Every pairwise-intersecting family is tested when
// n <= 10, only maximal ones above that.
bool verify_arc_model(const Graph& g, const ArcModel& m);

}  // namespace circ3
