#pragma once

/// Orchestration: uncovered-region computation, patching, the
/// constraint-generation loop, convex merging, and merge-of-solutions.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polycover/arrangement.hpp"
#include "polycover/collect.hpp"
#include "polycover/cover.hpp"
#include "polycover/geom.hpp"
#include "polycover/model.hpp"
#include "polycover/witness.hpp"

namespace polycover {

struct UncoveredComponent {
  /// Stitched boundary; absent only for degenerate weakly-simple
  /// component boundaries, where `fallback_pieces` carries an exact
  /// convex decomposition instead.
  std::optional<PolygonWithHoles> polygon;
  std::vector<ConvexPolygon> fallback_pieces;
};

struct UncoveredRegion {
  std::vector<UncoveredComponent> components;
  bool empty() const { return components.empty(); }
};

enum class SolverKind { Greedy, Anneal, Exact };
enum class PatchMode { ConstraintGen, PatchAndStop };

struct PipelineConfig {
  CollectionConfig collection;
  WitnessOrigin witness_origin = WitnessOrigin::QuickVertex;
  SolverKind solver = SolverKind::Greedy;
  std::size_t max_iterations = 20;
  PatchMode patch_mode = PatchMode::ConstraintGen;
  std::uint64_t seed = 0;
  std::size_t anneal_iterations = 2000;
  std::size_t anneal_removals = 3;
  long anneal_temperature = 100;  // numerator of t = tau / i
  std::int64_t exact_budget_ms = 10000;
  std::size_t face_cap = Arrangement::kDefaultFaceCap;
};

struct RunReport {
  std::size_t iterations_used = 0;
  std::vector<std::size_t> witness_counts;   // per iteration
  std::vector<std::size_t> solution_sizes;   // per iteration (pre-patch)
  std::vector<std::int64_t> iteration_ms;
  bool patched = false;  // final solution includes patch polygons
  std::optional<Rat> relative_size;

  Json to_json() const;
};

/// Connected components of P minus the union of the polygons, exact,
/// grouped by edge adjacency (point contacts separate components).
UncoveredRegion uncovered_region(const PolygonWithHoles& p,
                                 const std::vector<ConvexPolygon>& polys,
                                 std::size_t face_cap = Arrangement::kDefaultFaceCap);

/// Convex pieces of one component: the component itself when convex,
/// else its triangulation (or the trapezoid decomposition for
/// degenerate boundaries).
std::vector<ConvexPolygon> component_convex_pieces(const UncoveredComponent& comp);

/// Cover the uncovered region: convex pieces of every component,
/// greedily merged. S united with the result covers P.
std::vector<ConvexPolygon> patch(const PolygonWithHoles& p, const UncoveredRegion& u);

/// Repeatedly replace a pair by the hull of its union while the hull
/// stays inside P; pairs scanned by index, restarting after each merge.
std::vector<ConvexPolygon> greedy_merge_convex(const PolygonWithHoles& p,
                                               std::vector<ConvexPolygon> r);

std::pair<Solution, RunReport> solve(const Instance& inst, const PipelineConfig& cfg);

/// Phase 2 only, with a caller-supplied collection.
std::pair<Solution, RunReport> solve_with_collection(const Instance& inst,
                                                     const Collection& col,
                                                     const PipelineConfig& cfg);

/// Re-solve over the deduplicated union of the input solutions' polygons.
/// Never returns a solution larger than the best input.
Solution merge_solutions(const Instance& inst, const std::vector<Solution>& sols,
                         const PipelineConfig& cfg);

/// best_size / |s| as an exact rational.
Rat relative_size(const Solution& s, std::size_t best_size);

}  // namespace polycover
