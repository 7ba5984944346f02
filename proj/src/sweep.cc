#include "circ3/sweep.hh"

#include "circ3/chromatic.hh"
#include "circ3/circular_arc.hh"
#include "circ3/error.hh"
#include "circ3/extension.hh"
#include "circ3/obstructions.hh"
#include "circ3/oracle.hh"
#include "circ3/representation.hh"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace circ3 {

std::string_view check_name(SweepCheck c) {
  switch (c) {
    case SweepCheck::AgeC3: return "ageC3";
    case SweepCheck::ChiC: return "chic";
    case SweepCheck::Uca: return "uca";
    case SweepCheck::Extension: return "extension";
    case SweepCheck::All: return "all";
  }
  return "?";
}

std::optional<SweepCheck> parse_check(std::string_view name) {
  for (auto c : {SweepCheck::AgeC3, SweepCheck::ChiC, SweepCheck::Uca, SweepCheck::Extension, SweepCheck::All})
    if (check_name(c) == name) return c;
  return std::nullopt;
}

namespace {

std::optional<std::string> check_age(const Graph& g, bool& positive) {
  const auto witness = classify_free(g);
  positive = !witness;
  for (Pattern p : kAllPatterns) {
    const bool found = find_pattern(g, p).has_value();
    if (found != oracle::induced(g, p))
      return std::string("pattern search disagrees with the oracle on ") + std::string(pattern_name(p));
  }
  if (witness && !verify_witness(g, *witness)) return "witness does not verify";

  const auto rep = find_circle_representation(g);
  const bool represented = rep.outcome == RepresentationOutcome::Represented;
  if (rep.outcome == RepresentationOutcome::CapExhausted) return "representation search hit its cap";
  if (represented && !verify_representation(g, rep.rep)) return "representation does not verify";

  // Third verdict: a full homomorphism into some K_{3k-1,k}.
  bool full_hom = false;
  if (positive) {
    const Graph h = to_maximal_triangle_free(g).graph;
    for (int k = 1; k <= std::max(1, h.order()) && !full_hom; ++k)
      if (auto f = full_hom_search(h, k)) {
        f->map.resize(static_cast<std::size_t>(g.order()));
        if (!verify_full_hom(g, *f)) return "restricted full homomorphism does not verify";
        full_hom = true;
      }
  } else {
    for (int k = 1; k <= std::max(1, g.order()) && !full_hom; ++k) full_hom = full_hom_search(g, k).has_value();
  }
  if (positive != represented || positive != full_hom)
    return "verdicts differ: free=" + std::to_string(positive) + " represented=" + std::to_string(represented) +
           " full_hom=" + std::to_string(full_hom);
  return std::nullopt;
}

std::optional<std::string> check_chic(const Graph& g, bool& positive) {
  const auto audit = equivalence_audit(g);
  positive = audit.below_three;
  for (const auto& v : audit.verdicts)
    if (!verify_certificate(g, v)) return "certificate of route " + std::string(route_name(v.route)) + " fails";
  if (g.order() <= 5) {
    const bool expected = g.edge_count() == 0 || oracle::chi_c(g) < Fraction(3);
    if (expected != positive) return "routes disagree with the oracle circular chromatic number";
  }
  return std::nullopt;
}

std::optional<std::string> check_uca(const Graph& g, bool& positive) {
  positive = !is_uca_alpha_lt_3(g).has_value();
  const auto model = arc_model(g);
  if (positive != model.has_value()) return "recognition and model construction disagree";
  if (model && !verify_arc_model(g, *model)) return "arc model does not verify";
  return std::nullopt;
}

std::optional<std::string> check_extension(const Graph& g, bool& positive) {
  positive = is_free(g);
  if (!positive) return std::nullopt;
  const int n = g.order();
  VertexSet first(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) first[i] = i;

  const auto up = to_maximal_triangle_free(g);
  if (!is_free(up.graph)) return "vertex extension is not free";
  if (!is_maximal_triangle_free(up.graph)) return "vertex extension is not maximal triangle-free";
  if (!(up.graph.induced(first) == g)) return "vertex extension does not contain the input induced";
  if (!(replay(g, up.trace) == up.graph)) return "vertex extension trace does not replay";

  const auto sp = spanning_free_extension(g);
  if (sp.graph.order() != n) return "spanning extension changed the vertex set";
  for (auto [u, v] : g.edges())
    if (!sp.graph.adjacent(u, v)) return "spanning extension lost an edge";
  if (!is_free(sp.graph)) return "spanning extension is not free";
  if (!is_maximal_triangle_free(sp.graph)) return "spanning extension is not maximal triangle-free";
  if (!(replay(g, sp.trace) == sp.graph)) return "spanning extension trace does not replay";
  return std::nullopt;
}

int default_threads() {
  if (const char* env = std::getenv("CIRC3_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepStats sweep_one(int n, SweepCheck c, int threads) {
  SweepStats stats;
  stats.check = c;
  stats.n = n;
  const std::uint64_t total = oracle::graph_count(n);
  constexpr std::uint64_t chunk = 256;
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    SweepStats local;
    for (std::uint64_t begin; (begin = next.fetch_add(chunk)) < total;)
      for (std::uint64_t code = begin; code < std::min(total, begin + chunk); ++code) {
        const Graph g = oracle::graph_from_code(n, code);
        bool positive = false;
        std::optional<std::string> fail;
        try {
          fail = check_graph(c, g, positive);
        } catch (const std::exception& e) {
          fail = std::string("exception: ") + e.what();
        }
        ++local.graphs;
        local.positive += positive;
        if (fail) {
          ++local.failures;
          if (!local.first || code < local.first->code) local.first = SweepFailure{code, *fail};
        }
      }
    std::lock_guard lock(mu);
    stats.graphs += local.graphs;
    stats.positive += local.positive;
    stats.failures += local.failures;
    if (local.first && (!stats.first || local.first->code < stats.first->code)) stats.first = local.first;
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return stats;
}

}  // namespace

std::optional<std::string> check_graph(SweepCheck c, const Graph& g, bool& positive) {
  switch (c) {
    case SweepCheck::AgeC3: return check_age(g, positive);
    case SweepCheck::ChiC: return check_chic(g, positive);
    case SweepCheck::Uca: return check_uca(g, positive);
    case SweepCheck::Extension: return check_extension(g, positive);
    case SweepCheck::All: break;
  }
  throw InputError("check_graph needs a single check");
}

std::vector<SweepStats> run_sweep(int n, SweepCheck c, int threads) {
  oracle::graph_count(n);  // validates n
  if (threads <= 0) threads = default_threads();
  std::vector<SweepStats> out;
  if (c == SweepCheck::All) {
    for (auto one : {SweepCheck::AgeC3, SweepCheck::ChiC, SweepCheck::Uca, SweepCheck::Extension})
      out.push_back(sweep_one(n, one, threads));
  } else {
    out.push_back(sweep_one(n, c, threads));
  }
  return out;
}

}  // namespace circ3
