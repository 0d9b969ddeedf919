#pragma once

/// Finite set cover over a coverage matrix: greedy construction,
/// simulated annealing improvement, and an exact branch-and-bound
/// solver for the optimum on desk-scale matrices.

#include <cstdint>
#include <optional>
#include <vector>

#include "polycover/geom.hpp"
#include "polycover/jsonio.hpp"
#include "polycover/rng.hpp"
#include "polycover/witness.hpp"

namespace polycover {

struct CoverInstance {
  std::size_t n_sets = 0;
  std::size_t n_witnesses = 0;
  std::vector<std::vector<int>> membership;  // per witness: covering set ids
  std::vector<std::vector<int>> reverse;     // per set: covered witness ids
};

struct CoverSolution {
  std::vector<int> chosen;  // in insertion order
  std::optional<std::size_t> lower_bound;
  bool optimal = false;

  std::size_t size() const { return chosen.size(); }
};

struct AnnealParams {
  std::size_t iterations = 20000;
  std::size_t removals_per_step = 3;
  Rat temperature_numerator = 100;  // t = numerator / i
  std::uint64_t rng_seed = 0;
};

/// Throws UncoveredWitness when some witness is covered by no polygon,
/// which means the collection misses part of P near that witness.
CoverInstance build_cover_instance(const std::vector<ConvexPolygon>& polys,
                                   const WitnessSet& ws);

/// Coverage matrix without geometry, for tests and import.
CoverInstance cover_instance_from_rows(std::size_t n_sets,
                                       std::vector<std::vector<int>> rows);

/// Largest-uncovered-count greedy with random tie-breaking, followed by
/// a redundancy pass in insertion order.
CoverSolution greedy_cover(const CoverInstance& ci, Rng& rng);

/// Start from greedy, then repeatedly remove a few random sets and
/// repair greedily; worse solutions are accepted with probability
/// e^{100 d / t}, t = numerator / i. Returns the best cover seen.
CoverSolution anneal_cover(const CoverInstance& ci, const AnnealParams& params);

/// Branch and bound on the set covering the most uncovered witnesses.
/// Within budget the result is optimal with lower_bound = |chosen|;
/// on timeout the incumbent is returned with the root lower bound.
CoverSolution exact_cover(const CoverInstance& ci, std::int64_t time_budget_ms = 10000);

/// max(ceil(|W| / max set size), size of a pairwise-disjoint-membership
/// witness family). Every cover needs at least this many sets.
std::size_t cover_lower_bound(const CoverInstance& ci);

Json cover_instance_to_json(const CoverInstance& ci);
CoverInstance cover_instance_from_json(const Json& j);

}  // namespace polycover
