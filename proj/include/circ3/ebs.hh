#pragma once

#include "circ3/fraction.hh"
#include "circ3/graph.hh"
#include "circ3/representation.hh"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circ3 {

/// Finite {E,B,S}-structure on elements 0..n-1, relations stored as dense
/// boolean tables.
class EBSStructure {
 public:
  EBSStructure() = default;
  explicit EBSStructure(int n);

  int size() const { return n_; }

  bool E(int x, int y) const { return e_[x * n_ + y]; }
  bool B(int x, int y, int z) const { return b_[(x * n_ + y) * n_ + z]; }
  bool S(int a, int b, int c, int d) const { return s_[((a * n_ + b) * n_ + c) * n_ + d]; }

  void set_E(int x, int y, bool v) { e_[x * n_ + y] = v; }
  void set_B(int x, int y, int z, bool v) { b_[(x * n_ + y) * n_ + z] = v; }
  void set_S(int a, int b, int c, int d, bool v) { s_[((a * n_ + b) * n_ + c) * n_ + d] = v; }

  Graph graph() const;  // the E-reduct; requires E symmetric and loopless

  friend bool operator==(const EBSStructure&, const EBSStructure&) = default;

 private:
  int n_ = 0;
  std::vector<char> e_, b_, s_;
};

// Geometry on the unit circle. Points must be pairwise distinct, in [0,1),
// and never at distance exactly 1/3.
bool geo_E(const Fraction& a, const Fraction& b);
bool geo_B(const Fraction& x, const Fraction& y, const Fraction& z);
bool geo_S(const Fraction& a, const Fraction& b, const Fraction& c, const Fraction& d);

// Throws InputError on repeated points, points outside [0,1), or a pair at
// distance exactly 1/3.
void check_point_set(std::span<const Fraction> points);
EBSStructure ebs_from_points(std::span<const Fraction> points);

struct AxiomViolation {
  std::string axiom;  // UE1 .. UM8
  std::vector<int> witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive evaluation of the eighteen universal axioms. Every tuple is
// tried, repeated entries included, except for US1 which speaks about
// distinct elements. `limit` caps the number of violations kept per axiom.
AxiomReport check_universal_axioms(const EBSStructure& a, std::size_t limit = 16);
// Re-evaluates the axiom's matrix on the witness; true iff it is false there.
bool violation_holds(const EBSStructure& a, const AxiomViolation& v);

// Checks that B agrees with its universal and existential definitions and S
// with its case table, quantifiers ranging over all rational points of the
// circle. One probe per cell of the arrangement {p, p + 1/3, p - 1/3} decides
// each quantifier exactly.
bool check_definability(const EBSStructure& a, std::span<const Fraction> points);

// S(x_i, x_j, x_k, x_l) for all i < j < k < l.
bool sep(const EBSStructure& a, std::span<const int> xs);

// ~_v classes of sub \ N(v) together with X = sub within N(v). Y holds the
// class of the smallest element.
struct XYZPartition {
  VertexSet X, Y, Z;
};
XYZPartition xyz_partition(const EBSStructure& a, const VertexSet& sub, int v);

struct BBounds {
  int s, t;
  std::vector<int> order;  // U sorted by <_{st}
};
BBounds b_bounds(const EBSStructure& a, const VertexSet& u);

// Which one-point extension lemma applies to (sub, v) and which of its items
// holds. `lemma` is 7 (sub independent), 10 (X empty), 11 (exactly one of
// Y, Z empty), 12 (X, Y, Z all nonempty) or 0 for the degenerate inputs the
// lemmas leave out (|sub| <= 1, or two adjacent elements).
struct ExtensionCase {
  int lemma = 0;
  int item = 0;
  // Distinguished elements; -1 when absent. With lemma == 7: u, w, a, b.
  int u = -1, w = -1, a = -1, b = -1;
  int x1 = -1, x2 = -1, y1 = -1, y2 = -1, z1 = -1, z2 = -1;
  std::string describe() const;
};

// Every labeling of the B-bound pairs (and of Y versus Z) is tried; the
// result lists all items that hold under some labeling. Axioms predict
// exactly one (none when lemma == 0).
std::vector<ExtensionCase> matching_cases(const EBSStructure& a, const VertexSet& sub, int v);
ExtensionCase classify_one_point_extension(const EBSStructure& a, const VertexSet& sub, int v);

// Places the elements one by one. Each new point is taken from the cells
// where the atomic formulas named by its extension case hold; the full type
// is checked afterwards. Throws PreconditionError if the axioms fail and
// InternalError if no cell qualifies.
CircleRepresentation incremental_embed(const EBSStructure& a);

}  // namespace circ3
