#include "polycover/pipeline.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <set>

namespace polycover {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

}  // namespace

Json RunReport::to_json() const {
  Json j;
  j["iterations_used"] = iterations_used;
  j["witness_counts"] = witness_counts;
  j["solution_sizes"] = solution_sizes;
  j["iteration_ms"] = iteration_ms;
  j["patched"] = patched;
  if (relative_size) j["relative_size"] = json_from_rat(*relative_size);
  return j;
}

UncoveredRegion uncovered_region(const PolygonWithHoles& p,
                                 const std::vector<ConvexPolygon>& polys,
                                 std::size_t face_cap) {
  Arrangement arr = build_arrangement(p, polys, face_cap);
  const auto& faces = arr.faces();
  std::vector<char> selected(faces.size(), 0);
  for (std::size_t f = 0; f < faces.size(); f++) {
    if (!faces[f].inside_p) continue;
    bool covered = false;
    for (const ConvexPolygon& c : polys)
      if (point_in_convex(c, faces[f].rep) != Side::Outside) {
        covered = true;
        break;
      }
    selected[f] = covered ? 0 : 1;
  }
  UncoveredRegion out;
  for (const std::vector<int>& comp : arr.components(selected)) {
    UncoveredComponent uc;
    uc.polygon = arr.component_polygon(comp);
    if (!uc.polygon) uc.fallback_pieces = arr.convex_decomposition(comp);
    out.components.push_back(std::move(uc));
  }
  return out;
}

std::vector<ConvexPolygon> component_convex_pieces(const UncoveredComponent& comp) {
  if (!comp.polygon) return comp.fallback_pieces;
  const PolygonWithHoles& poly = *comp.polygon;
  if (poly.holes().empty() && ring_convex(poly.outer()))
    return {ConvexPolygon::hull_of(poly.outer(), false)};
  return triangulate(poly);
}

std::vector<ConvexPolygon> greedy_merge_convex(const PolygonWithHoles& p,
                                               std::vector<ConvexPolygon> r) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < r.size() && !merged; i++) {
      for (std::size_t j = i + 1; j < r.size() && !merged; j++) {
        std::vector<Point> pts = r[i].vertices();
        const auto& vj = r[j].vertices();
        pts.insert(pts.end(), vj.begin(), vj.end());
        ConvexPolygon hull = ConvexPolygon::hull_of(std::move(pts), false);
        if (convex_in_pwh(p, hull)) {
          r[i] = std::move(hull);
          r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
  }
  return r;
}

std::vector<ConvexPolygon> patch(const PolygonWithHoles& p, const UncoveredRegion& u) {
  std::vector<ConvexPolygon> pieces;
  for (const UncoveredComponent& comp : u.components) {
    std::vector<ConvexPolygon> cp = component_convex_pieces(comp);
    pieces.insert(pieces.end(), cp.begin(), cp.end());
  }
  return greedy_merge_convex(p, pieces);
}

namespace {

CoverSolution run_solver(const CoverInstance& ci, const PipelineConfig& cfg,
                         std::size_t iteration) {
  switch (cfg.solver) {
    case SolverKind::Greedy: {
      Rng rng = Rng::derive(cfg.seed, iteration, 1);
      return greedy_cover(ci, rng);
    }
    case SolverKind::Anneal: {
      AnnealParams params;
      params.iterations = cfg.anneal_iterations;
      params.removals_per_step = cfg.anneal_removals;
      params.temperature_numerator = Rat(cfg.anneal_temperature);
      params.rng_seed = Rng::derive(cfg.seed, iteration, 2).next();
      return anneal_cover(ci, params);
    }
    case SolverKind::Exact:
      return exact_cover(ci, cfg.exact_budget_ms);
  }
  return {};
}

WitnessSet initial_witnesses(const PolygonWithHoles& p,
                             const std::vector<ConvexPolygon>& polys,
                             const PipelineConfig& cfg) {
  switch (cfg.witness_origin) {
    case WitnessOrigin::Arrangement:
      return arrangement_witnesses(p, polys, cfg.face_cap);
    case WitnessOrigin::Vertex:
      return vertex_witnesses(p, polys, cfg.face_cap);
    default:
      return quick_vertex_witnesses(p, polys);
  }
}

}  // namespace

std::pair<Solution, RunReport> solve_with_collection(const Instance& inst,
                                                     const Collection& col,
                                                     const PipelineConfig& cfg) {
  const PolygonWithHoles& p = inst.polygon;
  RunReport report;
  WitnessSet ws = initial_witnesses(p, col.polygons, cfg);

  std::vector<ConvexPolygon> chosen;
  for (std::size_t iter = 1; iter <= cfg.max_iterations; iter++) {
    Clock::time_point t0 = Clock::now();
    report.iterations_used = iter;
    report.witness_counts.push_back(ws.size());

    CoverInstance ci = build_cover_instance(col.polygons, ws);
    CoverSolution cs = run_solver(ci, cfg, iter);
    chosen.clear();
    for (int s : cs.chosen) chosen.push_back(col.polygons[s]);
    report.solution_sizes.push_back(chosen.size());

    UncoveredRegion u = uncovered_region(p, chosen, cfg.face_cap);
    if (u.empty()) {
      report.iteration_ms.push_back(ms_since(t0));
      break;
    }
    if (cfg.patch_mode == PatchMode::PatchAndStop || iter == cfg.max_iterations) {
      std::vector<ConvexPolygon> extra = patch(p, u);
      chosen.insert(chosen.end(), extra.begin(), extra.end());
      report.patched = true;
      report.iteration_ms.push_back(ms_since(t0));
      break;
    }
    // Constraint generation: a plain witness inside every convex piece
    // of every uncovered component; each lies in an uncovered face, so
    // the witness set strictly grows.
    for (const UncoveredComponent& comp : u.components)
      for (const ConvexPolygon& piece : component_convex_pieces(comp))
        ws.add(Witness::plain(piece.centroid()));
    ws.origin = WitnessOrigin::Generated;
    report.iteration_ms.push_back(ms_since(t0));
  }

  Meta meta;
  meta.method = col.method;
  switch (cfg.solver) {
    case SolverKind::Greedy: meta.solver = "greedy"; break;
    case SolverKind::Anneal: meta.solver = "anneal"; break;
    case SolverKind::Exact: meta.solver = "exact"; break;
  }
  meta.seed = cfg.seed;
  meta.iterations = report.iterations_used;
  Solution sol = Solution::from_convex(inst.name, chosen, meta);
  return {std::move(sol), std::move(report)};
}

std::pair<Solution, RunReport> solve(const Instance& inst, const PipelineConfig& cfg) {
  CollectionConfig ccfg = cfg.collection;
  ccfg.seed = ccfg.seed ? ccfg.seed : cfg.seed;
  Collection col = build_collection(inst.polygon, ccfg);
  return solve_with_collection(inst, col, cfg);
}

Solution merge_solutions(const Instance& inst, const std::vector<Solution>& sols,
                         const PipelineConfig& cfg) {
  assert(!sols.empty());
  Collection merged;
  merged.method = "merge";
  merged.seed = cfg.seed;
  std::set<std::vector<Point>, PointVecLess> seen;
  for (const Solution& s : sols)
    for (const auto& ring : s.polygons) {
      ConvexPolygon c = convex_from_ring(ring);
      if (seen.insert(c.vertices()).second) merged.polygons.push_back(std::move(c));
    }
  std::sort(merged.polygons.begin(), merged.polygons.end(), ConvexPolygonLess{});

  auto [sol, report] = solve_with_collection(inst, merged, cfg);

  // The inputs are feasible subsets of the merged collection, so never
  // return anything larger than the best of them.
  const Solution* best_input = &sols.front();
  for (const Solution& s : sols)
    if (s.size() < best_input->size()) best_input = &s;
  if (best_input->size() < sol.size()) {
    Solution out = *best_input;
    out.instance_name = inst.name;
    out.meta.method = "merge";
    return out;
  }
  sol.meta.method = "merge";
  return sol;
}

Rat relative_size(const Solution& s, std::size_t best_size) {
  assert(best_size >= 1);
  assert(!s.polygons.empty());
  return Rat(static_cast<unsigned long>(best_size)) /
         Rat(static_cast<unsigned long>(s.size()));
}

}  // namespace polycover
