#include "circ3/ebs.hh"

#include "circ3/error.hh"
#include "circ3/obstructions.hh"
#include "circ3/oracle.hh"
#include "circ3/representation.hh"
#include "support.hh"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace circ3;
using circ3::testing::fr;
using circ3::testing::random_points;

namespace {

EBSStructure structure(std::initializer_list<Fraction> pts) {
  std::vector<Fraction> v(pts);
  return ebs_from_points(v);
}

VertexSet range(int n) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

bool independent(const EBSStructure& a, const VertexSet& s) {
  for (int x : s)
    for (int y : s)
      if (a.E(x, y)) return false;
  return true;
}

// Closure of each part under B inside sub, plus the four bullets on X, Y, Z.
bool partition_laws(const EBSStructure& a, const VertexSet& sub, int v, const XYZPartition& p) {
  VertexSet all = p.X;
  all.insert(all.end(), p.Y.begin(), p.Y.end());
  all.insert(all.end(), p.Z.begin(), p.Z.end());
  std::ranges::sort(all);
  VertexSet sorted = sub;
  std::ranges::sort(sorted);
  if (all != sorted) return false;
  for (const VertexSet* part : {&p.X, &p.Y, &p.Z}) {
    if (!independent(a, *part)) return false;
    for (int s : *part)
      for (int t : *part) {
        if (a.B(s, v, t)) return false;
        for (int u : sub)
          if (a.B(s, u, t) && std::ranges::find(*part, u) == part->end()) return false;
      }
  }
  for (int x : p.X)
    if (!a.E(x, v)) return false;
  for (const VertexSet* part : {&p.Y, &p.Z})
    for (int y : *part) {
      if (a.E(y, v)) return false;
      for (int y2 : *part)
        if (y != y2 && !a.B(y, y2, v) && !a.B(y2, y, v)) return false;
    }
  for (int y : p.Y)
    for (int z : p.Z)
      if (!a.E(y, z) && !a.B(y, v, z)) return false;
  return true;
}

}  // namespace

TEST_CASE("structure from a point set") {
  const auto a = structure({fr(0, 1), fr(1, 10), fr(1, 5)});
  int count = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) count += a.B(x, y, z);
  CHECK(count == 2);
  CHECK(a.B(0, 1, 2));
  CHECK(a.B(2, 1, 0));

  const auto pair = structure({fr(0, 1), fr(1, 2)});
  CHECK(pair.E(0, 1));
  CHECK(pair.E(1, 0));
  CHECK_FALSE(pair.E(0, 0));

  const auto four = structure({fr(0, 1), fr(1, 8), fr(1, 2), fr(5, 8)});
  CHECK(four.S(0, 1, 2, 3));
  CHECK_FALSE(four.S(0, 2, 1, 3));
  CHECK_FALSE(four.S(0, 1, 3, 2));
}

TEST_CASE("point sets at distance exactly one third are rejected") {
  std::vector<Fraction> pts = {fr(0, 1), fr(1, 3)};
  CHECK_THROWS_AS(ebs_from_points(pts), InputError);
  pts = {fr(0, 1), fr(0, 1)};
  CHECK_THROWS_AS(ebs_from_points(pts), InputError);
}

TEST_CASE("axiom checker examples") {
  EBSStructure a(3);
  a.set_B(0, 1, 2, true);
  a.set_B(2, 1, 0, true);
  a.set_B(1, 2, 0, true);
  a.set_B(0, 2, 1, true);
  auto r = check_universal_axioms(a);
  CHECK(std::ranges::any_of(r.violations, [](auto& v) { return v.axiom == "UB2"; }));
  for (const auto& v : r.violations) CHECK(violation_holds(a, v));

  EBSStructure empty3(3);
  r = check_universal_axioms(empty3);
  CHECK(std::ranges::any_of(r.violations, [](auto& v) { return v.axiom == "UM1"; }));
}

TEST_CASE("random point sets satisfy the universal axioms and definability") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 9;
    const auto pts = random_points(rng, n);
    const auto a = ebs_from_points(pts);
    CHECK(check_universal_axioms(a).ok());
    CHECK(check_definability(a, pts));
  }
}

TEST_CASE("definability examples") {
  const std::vector<Fraction> k52 = {fr(0, 1), fr(2, 5), fr(4, 5), fr(1, 5), fr(3, 5), fr(1, 50), fr(21, 50)};
  auto a = ebs_from_points(k52);
  CHECK(check_definability(a, k52));
  // Flipping one S orbit keeps the axioms about symmetry but breaks the case table.
  for (int p = 0; p < 4; ++p) a.set_S(p, (p + 1) % 4, (p + 2) % 4, (p + 3) % 4, !a.S(p, (p + 1) % 4, (p + 2) % 4, (p + 3) % 4));
  CHECK_FALSE(check_definability(a, k52));
}

TEST_CASE("xyz partition examples") {
  // v at index 0 throughout.
  auto a = structure({fr(0, 1), fr(1, 2)});
  auto p = xyz_partition(a, {1}, 0);
  CHECK(p.X == VertexSet{1});
  CHECK(p.Y.empty());
  CHECK(p.Z.empty());

  a = structure({fr(0, 1), fr(1, 10), fr(1, 5)});
  p = xyz_partition(a, {1, 2}, 0);
  CHECK(p.X.empty());
  CHECK(p.Y == VertexSet{1, 2});
  CHECK(p.Z.empty());

  a = structure({fr(0, 1), fr(1, 10), fr(9, 10)});
  p = xyz_partition(a, {1, 2}, 0);
  CHECK(p.Y == VertexSet{1});
  CHECK(p.Z == VertexSet{2});
}

TEST_CASE("b-bounds examples") {
  auto a = structure({fr(0, 1), fr(1, 10), fr(1, 5)});
  auto b = b_bounds(a, {0, 1, 2});
  CHECK(b.s == 0);
  CHECK(b.t == 2);
  b = b_bounds(a, {1});
  CHECK(b.s == 1);
  CHECK(b.t == 1);

  a = structure({fr(0, 1), fr(1, 20), fr(1, 10), fr(3, 20)});
  b = b_bounds(a, {2, 0, 3, 1});
  CHECK(b.s == 0);
  CHECK(b.t == 3);
  CHECK(b.order == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_AS(b_bounds(structure({fr(0, 1), fr(1, 2)}), {0, 1}), PreconditionError);
}

TEST_CASE("classification examples") {
  // sub independent, v adjacent to both bounds.
  auto a = structure({fr(0, 1), fr(1, 10), fr(1, 5), fr(3, 5)});
  auto c = classify_one_point_extension(a, {0, 1, 2}, 3);
  CHECK(c.lemma == 7);
  CHECK(c.item == 1);

  // X, Y, Z singletons: v = 0, y = 1/10, z = 9/10, x = 1/2.
  a = structure({fr(0, 1), fr(1, 10), fr(9, 10), fr(1, 2)});
  c = classify_one_point_extension(a, {1, 2, 3}, 0);
  CHECK(c.lemma == 12);
  CHECK(c.item == 1);

  // X empty, Y and Z of size two joined by an edge y1 z2.
  a = structure({fr(0, 1), fr(1, 20), fr(1, 4), fr(19, 20), fr(3, 4)});
  const auto p = xyz_partition(a, {1, 2, 3, 4}, 0);
  CHECK(p.X.empty());
  CHECK(p.Y.size() == 2);
  CHECK(p.Z.size() == 2);
  c = classify_one_point_extension(a, {1, 2, 3, 4}, 0);
  CHECK(c.lemma == 10);
  CHECK(c.item == 3);
  CHECK(a.E(c.y1, c.z2));
}

TEST_CASE("partition laws and exclusivity on random structures") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 8;
    const auto pts = random_points(rng, n);
    const auto a = ebs_from_points(pts);
    for (int v = 0; v < n; ++v)
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (mask >> v & 1) continue;
        VertexSet sub;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) sub.push_back(i);
        if (sub.empty()) continue;
        CHECK(partition_laws(a, sub, v, xyz_partition(a, sub, v)));
        const auto cases = matching_cases(a, sub, v);
        CHECK_MESSAGE(cases.size() == 1, "v=", v, " mask=", mask);
        ++checked;
      }
  }
  CHECK(checked > 1000);
}

TEST_CASE("sep and the insertion rule") {
  // Points in counterclockwise order 0 < 1/5 < 2/5 < 3/5 < 4/5.
  const auto a = structure({fr(0, 1), fr(1, 5), fr(2, 5), fr(3, 5), fr(4, 5)});
  CHECK(sep(a, std::vector<int>{0, 1, 2, 3, 4}));
  CHECK(sep(a, std::vector<int>{2, 3, 4, 0, 1}));
  CHECK(sep(a, std::vector<int>{4, 3, 2, 1, 0}));
  CHECK_FALSE(sep(a, std::vector<int>{0, 2, 1, 3, 4}));
  // Sep(0,1,3,4) and S(1,2,3,0) give Sep(0,1,2,3,4).
  CHECK(sep(a, std::vector<int>{0, 1, 3, 4}));
  CHECK(a.S(1, 2, 3, 0));
}

TEST_CASE("incremental embedding") {
  auto edge = structure({fr(0, 1), fr(1, 2)});
  auto rep = incremental_embed(edge);
  CHECK(circ_dist(rep.points[0], rep.points[1]) > fr(1, 3));

  // C5 from its K_{5,2} placement with the elements shuffled.
  const std::vector<Fraction> c5 = {fr(3, 5), fr(0, 1), fr(4, 5), fr(2, 5), fr(1, 5)};
  const auto a = ebs_from_points(c5);
  rep = incremental_embed(a);
  CHECK(ebs_from_points(rep.points) == a);

  EBSStructure bad(3);
  bad.set_B(0, 1, 2, true);
  bad.set_B(1, 2, 0, true);
  CHECK_THROWS_AS(incremental_embed(bad), PreconditionError);
}

TEST_CASE("incremental embedding of random structures") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto pts = random_points(rng, 1 + trial % 10);
    const auto a = ebs_from_points(pts);
    const auto rep = incremental_embed(a);
    CHECK(ebs_from_points(rep.points) == a);
  }
}
