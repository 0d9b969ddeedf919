// Acceptance suite: one criterion per function, one PASS/FAIL line per
// criterion on stdout, exit code 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polycover/collect.hpp"
#include "polycover/cover.hpp"
#include "polycover/model.hpp"
#include "polycover/pipeline.hpp"
#include "polycover/witness.hpp"

using namespace polycover;
using namespace polycover::fixtures;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string*)> run;
};

std::set<std::vector<Point>, PointVecLess> hull_set(const std::vector<ConvexPolygon>& polys) {
  std::set<std::vector<Point>, PointVecLess> out;
  for (const ConvexPolygon& c : polys) out.insert(c.vertices());
  return out;
}

// 1. Enumeration equals the subset brute-force oracle on 200 random
//    simple polygons with at most 12 vertices, under 5 minutes.
bool criterion_enumeration(std::string* detail) {
  auto t0 = Clock::now();
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 200; seed++) {
    PolygonWithHoles p = random_simple_polygon(seed, 12);
    auto v = point_set(p, PointSetKind::V);
    auto got = hull_set(enumerate_maximal_convex(p, v).polygons);
    auto want = oracles::maximal_hulls_brute_force(p, v);
    if (got != want) {
      *detail = "mismatch on fuzz seed " + std::to_string(seed);
      return false;
    }
    checked++;
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - t0).count();
  std::ostringstream ss;
  ss << checked << " polygons in " << secs << "s";
  *detail = ss.str();
  return secs < 300;
}

// 2. LSH: exactly {T, Q1, Q2}; optimum 2; exact solver with quick
//    vertex witnesses ends at size 2 after one iteration.
bool criterion_lsh(std::string* detail) {
  PolygonWithHoles l = lsh();
  auto en = enumerate_maximal_convex(l, point_set(l, PointSetKind::V));
  std::set<std::vector<Point>, PointVecLess> want;
  want.insert(lsh_t().vertices());
  want.insert(lsh_q1().vertices());
  want.insert(lsh_q2().vertices());
  if (hull_set(en.polygons) != want) {
    *detail = "V-maximal set is not {T, Q1, Q2}";
    return false;
  }
  // Minimum cover size exactly 2: brute force over all subsets.
  std::size_t best = 99;
  for (std::uint64_t mask = 1; mask < 8; mask++) {
    std::vector<ConvexPolygon> subset;
    for (std::size_t i = 0; i < 3; i++)
      if (mask & (1ull << i)) subset.push_back(en.polygons[i]);
    if (uncovered_region(l, subset).empty())
      best = std::min(best, subset.size());
  }
  if (best != 2) {
    *detail = "minimum cover is " + std::to_string(best);
    return false;
  }
  Instance inst{l, "lsh", 6};
  PipelineConfig cfg;
  cfg.collection.method = CollectionMethod::BronKerbosch;
  cfg.solver = SolverKind::Exact;
  cfg.witness_origin = WitnessOrigin::QuickVertex;
  cfg.seed = 1;
  auto [sol, report] = solve(inst, cfg);
  if (sol.size() != 2 || report.iterations_used != 1) {
    *detail = "pipeline returned size " + std::to_string(sol.size()) + " in " +
              std::to_string(report.iterations_used) + " iterations";
    return false;
  }
  *detail = "3 maximal polygons, optimum 2, 1 iteration";
  return verify(inst, sol).all_ok();
}

// 3. socg_fixed60 reproduction: 82 V-maximal polygons, 1009 arrangement
//    witnesses, 200 vertex witnesses, under 60 seconds.
bool criterion_socg(std::string* detail) {
  const std::string path = std::string(POLYCOVER_TEST_DATA) + "/socg_fixed60.instance.json";
  std::ifstream in(path);
  if (!in.good()) {
    *detail = "requires the public CG:SHOP 2023 instance file at tests/data/"
              "socg_fixed60.instance.json (not redistributable here; download from "
              "the challenge site and re-run)";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  auto t0 = Clock::now();
  Instance inst = parse_instance(ss.str());
  auto en = enumerate_maximal_convex(inst.polygon, point_set(inst.polygon, PointSetKind::V));
  if (en.polygons.size() != 82) {
    *detail = "expected 82 V-maximal polygons, got " + std::to_string(en.polygons.size());
    return false;
  }
  WitnessSet arr_ws = arrangement_witnesses(inst.polygon, en.polygons);
  if (arr_ws.size() != 1009) {
    *detail = "expected 1009 arrangement witnesses, got " + std::to_string(arr_ws.size());
    return false;
  }
  WitnessSet v_ws = vertex_witnesses(inst.polygon, en.polygons);
  if (v_ws.size() != 200) {
    *detail = "expected 200 vertex witnesses, got " + std::to_string(v_ws.size());
    return false;
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - t0).count();
  std::ostringstream out;
  out << "82 polygons, 1009 + 200 witnesses in " << secs << "s";
  *detail = out.str();
  return secs < 60;
}

// 4. Merging verified solutions never yields a larger solution than the
//    best input, and improves strictly somewhere in the suite. Greedy
//    inputs over independently seeded collections; exact re-solve.
bool criterion_merge(std::string* detail) {
  int strict_improvements = 0;
  int fixtures = 0;
  for (std::uint64_t seed = 301; seed <= 420; seed++) {
    PolygonWithHoles p = random_simple_polygon(seed, 30);
    Instance inst{p, p.name(), p.vertex_count()};
    PipelineConfig base;
    base.collection.method = CollectionMethod::Triangulation;
    base.collection.replication = 1;
    base.solver = SolverKind::Greedy;
    base.witness_origin = WitnessOrigin::QuickVertex;

    std::vector<Solution> inputs;
    std::size_t best_input = SIZE_MAX;
    for (std::uint64_t k = 0; k < 3; k++) {
      PipelineConfig cfg = base;
      cfg.seed = seed * 10 + k;
      cfg.collection.seed = cfg.seed;
      auto [sol, report] = solve(inst, cfg);
      if (!verify(inst, sol).all_ok()) {
        *detail = "input solution failed verification on seed " + std::to_string(seed);
        return false;
      }
      best_input = std::min(best_input, sol.size());
      inputs.push_back(std::move(sol));
    }
    PipelineConfig merge_cfg = base;
    merge_cfg.solver = SolverKind::Exact;
    merge_cfg.seed = seed;
    Solution merged = merge_solutions(inst, inputs, merge_cfg);
    if (!verify(inst, merged).all_ok()) {
      *detail = "merged solution failed verification on seed " + std::to_string(seed);
      return false;
    }
    if (merged.size() > best_input) {
      *detail = "merge grew the solution on seed " + std::to_string(seed);
      return false;
    }
    if (merged.size() < best_input) strict_improvements++;
    fixtures++;
  }
  std::ostringstream ss;
  ss << fixtures << " fixtures, " << strict_improvements << " strict improvements";
  *detail = ss.str();
  return fixtures >= 20 && strict_improvements >= 1;
}

// 5. Set-cover solver suite on 500 random matrices with up to 15 sets:
//    exact equals exhaustive search; anneal <= greedy under shared
//    seeds; every output feasible and inclusion-minimal.
bool criterion_solvers(std::string* detail) {
  auto t0 = Clock::now();
  auto feasible = [](const CoverInstance& ci, const std::vector<int>& chosen) {
    std::set<int> sel(chosen.begin(), chosen.end());
    for (const auto& row : ci.membership) {
      bool hit = false;
      for (int s : row) hit = hit || sel.count(s);
      if (!hit) return false;
    }
    return true;
  };
  for (std::uint64_t seed = 1; seed <= 500; seed++) {
    Rng rng(seed * 977);
    std::size_t n_sets = 2 + rng.below(14);  // up to 15
    std::size_t n_wit = 1 + rng.below(22);
    std::vector<std::vector<int>> rows(n_wit);
    for (auto& row : rows) {
      std::size_t k = 1 + rng.below(n_sets);
      for (std::size_t i = 0; i < k; i++)
        row.push_back(static_cast<int>(rng.below(n_sets)));
    }
    CoverInstance ci = cover_instance_from_rows(n_sets, std::move(rows));

    CoverSolution exact = exact_cover(ci);
    std::size_t want = oracles::min_cover_brute_force(ci.n_sets, ci.membership);
    if (!exact.optimal || exact.size() != want) {
      *detail = "exact_cover mismatch on seed " + std::to_string(seed);
      return false;
    }
    Rng greedy_rng(seed);
    CoverSolution greedy = greedy_cover(ci, greedy_rng);
    AnnealParams params;
    params.iterations = 150;
    params.rng_seed = seed;
    CoverSolution sa = anneal_cover(ci, params);
    if (sa.size() > greedy.size()) {
      *detail = "anneal worse than greedy on seed " + std::to_string(seed);
      return false;
    }
    for (const CoverSolution* sol : {&exact, &greedy, &sa}) {
      if (!feasible(ci, sol->chosen)) {
        *detail = "infeasible output on seed " + std::to_string(seed);
        return false;
      }
      for (std::size_t i = 0; i < sol->chosen.size(); i++) {
        std::vector<int> reduced = sol->chosen;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
        if (feasible(ci, reduced)) {
          *detail = "non-minimal output on seed " + std::to_string(seed);
          return false;
        }
      }
    }
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - t0).count();
  std::ostringstream ss;
  ss << "500 matrices in " << secs << "s";
  *detail = ss.str();
  return secs < 300;
}

// 6. Arrangement-witness exactness: over every subset of collections
//    with at most 6 polygons, witness coverage iff region coverage.
bool criterion_witness_exactness(std::string* detail) {
  struct Fixture {
    PolygonWithHoles p;
    std::vector<ConvexPolygon> collection;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({lsh(), {lsh_t(), lsh_q1(), lsh_q2()}});
  fixtures.push_back({donut(), donut_slabs()});
  {
    PolygonWithHoles sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {}, "sq4");
    fixtures.push_back(
        {sq,
         {ConvexPolygon::hull_of({{0, 0}, {4, 0}, {4, 2}, {0, 2}}),
          ConvexPolygon::hull_of({{0, 2}, {4, 2}, {4, 4}, {0, 4}}),
          ConvexPolygon::hull_of({{2, 1}, {3, 2}, {2, 3}, {1, 2}}),
          ConvexPolygon::hull_of({{0, 0}, {2, 0}, {2, 4}, {0, 4}}),
          ConvexPolygon::hull_of({{1, 1}, {3, 1}, {3, 3}, {1, 3}})}});
  }
  long subsets_checked = 0;
  for (const Fixture& fx : fixtures) {
    WitnessSet ws = arrangement_witnesses(fx.p, fx.collection);
    std::size_t n = fx.collection.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); mask++) {
      std::vector<ConvexPolygon> subset;
      for (std::size_t i = 0; i < n; i++)
        if (mask & (1ull << i)) subset.push_back(fx.collection[i]);
      bool all_covered = true;
      for (const Witness& w : ws.witnesses) {
        bool hit = false;
        for (const ConvexPolygon& c : subset) hit = hit || covers(c, w);
        all_covered = all_covered && hit;
        if (!all_covered) break;
      }
      bool region_covered = uncovered_region(fx.p, subset).empty();
      if (all_covered != region_covered) {
        *detail = "equivalence broken on " + fx.p.name() + " mask " + std::to_string(mask);
        return false;
      }
      subsets_checked++;
    }
  }
  *detail = std::to_string(subsets_checked) + " subsets checked";
  return true;
}

// 7. Constraint generation terminates within the arrangement-face-count
//    bound; the share of runs finishing within 3 iterations is reported.
bool criterion_termination(std::string* detail) {
  int runs = 0, within3 = 0;
  std::size_t max_iterations_seen = 0;

  // A fixed collection whose quick witnesses under-constrain the cover:
  // border rectangles cover every corner wedge while the middle stays
  // open, forcing several generation rounds.
  {
    PolygonWithHoles sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {}, "frame");
    Collection col;
    col.method = "fixed";
    col.polygons = {
        ConvexPolygon::hull_of({{0, 0}, {1, 0}, {1, 4}, {0, 4}}),
        ConvexPolygon::hull_of({{3, 0}, {4, 0}, {4, 4}, {3, 4}}),
        ConvexPolygon::hull_of({{0, 0}, {4, 0}, {4, 1}, {0, 1}}),
        ConvexPolygon::hull_of({{0, 3}, {4, 3}, {4, 4}, {0, 4}}),
        ConvexPolygon::hull_of({{1, 1}, {3, 1}, {3, 3}, {1, 3}}),
    };
    Instance inst{sq, "frame", 4};
    PipelineConfig cfg;
    cfg.solver = SolverKind::Exact;
    cfg.witness_origin = WitnessOrigin::QuickVertex;
    cfg.seed = 1;
    cfg.max_iterations = 200;
    auto [sol, report] = solve_with_collection(inst, col, cfg);
    if (!verify(inst, sol).all_ok() || report.patched) {
      *detail = "frame fixture failed";
      return false;
    }
    if (report.iterations_used < 2) {
      *detail = "frame fixture should need several iterations";
      return false;
    }
    std::size_t bound = build_arrangement(sq, col.polygons).inside_face_count();
    if (report.iterations_used > bound) {
      *detail = "frame fixture exceeded the face bound";
      return false;
    }
    max_iterations_seen = std::max(max_iterations_seen, report.iterations_used);
    if (report.iterations_used <= 3) within3++;
    runs++;
  }

  for (std::uint64_t seed = 401; runs < 30; seed++) {
    PolygonWithHoles p = random_simple_polygon(seed, 12);
    Instance inst{p, p.name(), p.vertex_count()};
    PipelineConfig cfg;
    cfg.collection.method = CollectionMethod::Triangulation;
    cfg.collection.replication = 2;
    cfg.collection.seed = seed;
    cfg.solver = runs % 2 ? SolverKind::Greedy : SolverKind::Exact;
    cfg.witness_origin = WitnessOrigin::QuickVertex;
    cfg.seed = seed;
    cfg.max_iterations = 200;  // large cap so termination is organic
    Collection col = build_collection(p, cfg.collection);
    auto [sol, report] = solve_with_collection(inst, col, cfg);
    if (!verify(inst, sol).all_ok()) {
      *detail = "invalid solution on seed " + std::to_string(seed);
      return false;
    }
    if (report.patched) {
      *detail = "hit the iteration cap on seed " + std::to_string(seed);
      return false;
    }
    for (std::size_t i = 1; i < report.witness_counts.size(); i++)
      if (report.witness_counts[i] <= report.witness_counts[i - 1]) {
        *detail = "witness count did not grow on seed " + std::to_string(seed);
        return false;
      }
    std::size_t bound = build_arrangement(p, col.polygons).inside_face_count();
    if (report.iterations_used > bound) {
      *detail = "iterations exceeded the face bound on seed " + std::to_string(seed);
      return false;
    }
    max_iterations_seen = std::max(max_iterations_seen, report.iterations_used);
    if (report.iterations_used <= 3) within3++;
    runs++;
  }
  std::ostringstream ss;
  ss << within3 << "/" << runs << " runs finished within 3 iterations (max "
     << max_iterations_seen << ")";
  *detail = ss.str();
  return true;
}

// 8. Every configuration over the fuzz corpus emits a solution passing
//    all verifier checks.
bool criterion_end_to_end(std::string* detail) {
  std::vector<PolygonWithHoles> corpus{lsh(), donut(), unit_square()};
  for (std::uint64_t seed = 501; seed <= 512; seed++)
    corpus.push_back(random_simple_polygon(seed, 14));
  int runs = 0;
  for (const PolygonWithHoles& p : corpus) {
    Instance inst{p, p.name(), p.vertex_count()};
    for (CollectionMethod method :
         {CollectionMethod::Triangulation, CollectionMethod::BronKerbosch}) {
      for (SolverKind solver : {SolverKind::Greedy, SolverKind::Anneal, SolverKind::Exact}) {
        for (WitnessOrigin origin : {WitnessOrigin::QuickVertex, WitnessOrigin::Vertex,
                                     WitnessOrigin::Arrangement}) {
          for (PatchMode mode : {PatchMode::ConstraintGen, PatchMode::PatchAndStop}) {
            PipelineConfig cfg;
            cfg.collection.method = method;
            cfg.collection.replication = 2;
            cfg.solver = solver;
            cfg.witness_origin = origin;
            cfg.patch_mode = mode;
            cfg.seed = 7 * runs + 1;
            cfg.collection.seed = cfg.seed;
            cfg.anneal_iterations = 200;
            auto [sol, report] = solve(inst, cfg);
            VerificationReport rep = verify(inst, sol);
            if (!rep.all_ok()) {
              *detail = "verification failed on " + p.name();
              return false;
            }
            runs++;
          }
        }
      }
    }
  }
  *detail = std::to_string(runs) + " pipeline runs, all verified";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "enumeration matches brute-force oracle", criterion_enumeration},
      {2, "LSH fixture: {T,Q1,Q2}, optimum 2, one iteration", criterion_lsh},
      {3, "socg_fixed60: 82 polygons, 1009/200 witnesses", criterion_socg},
      {4, "merging solutions never hurts, strictly helps somewhere", criterion_merge},
      {5, "set-cover solvers: exact optimum, anneal <= greedy, minimal", criterion_solvers},
      {6, "arrangement witnesses exactly characterize coverage", criterion_witness_exactness},
      {7, "constraint generation terminates within the face bound", criterion_termination},
      {8, "every pipeline configuration verifies end to end", criterion_end_to_end},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(&detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) failures++;
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
