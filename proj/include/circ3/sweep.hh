#pragma once

// Exhaustive checks over every labeled graph on n vertices.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circ3/graph.hh"

namespace circ3 {

enum class SweepCheck { AgeC3, ChiC, Uca, Extension, All };

std::string_view check_name(SweepCheck c);
std::optional<SweepCheck> parse_check(std::string_view name);

struct SweepFailure {
  std::uint64_t code;
  std::string reason;
};

struct SweepStats {
  SweepCheck check;
  int n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t positive = 0;  // free / chi_c < 3 / UCA with alpha < 3 / free
  std::uint64_t failures = 0;
  std::optional<SweepFailure> first;  // smallest failing code
};

// Checks a single graph; returns the failure reason if any, and sets
// `positive` to the verdict counted in SweepStats::positive.
std::optional<std::string> check_graph(SweepCheck c, const Graph& g, bool& positive);

// `threads` <= 0 means CIRC3_THREADS, or the hardware concurrency when unset.
// For SweepCheck::All one entry per check is returned.
std::vector<SweepStats> run_sweep(int n, SweepCheck c, int threads = 0);

}  // namespace circ3
