#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "polycover/collect.hpp"
#include "polycover/model.hpp"
#include "polycover/pipeline.hpp"
#include "polycover/render.hpp"

using namespace polycover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPipelineError = 3;
constexpr int kExitLimitExceeded = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << data;
}

struct SolveFlags {
  std::string collection = "triangulation";
  std::size_t replication = 4;
  std::vector<std::string> rounds;
  std::string witnesses = "quick";
  std::string solver = "exact";
  std::size_t max_iterations = 20;
  std::string patch_mode = "constraint-gen";
  std::uint64_t seed = 1;
  std::size_t sa_iterations = 2000;
  std::size_t sa_removals = 3;
  long sa_temperature = 100;
  std::int64_t time_limit_s = 60;
};

void add_solve_flags(CLI::App* cmd, SolveFlags* f) {
  cmd->add_option("--collection", f->collection, "Collection method: bk or triangulation")
      ->check(CLI::IsMember({"bk", "triangulation"}));
  cmd->add_option("--replication", f->replication,
                  "Copies per triangle (triangulation collections)");
  cmd->add_option("--rounds", f->rounds,
                  "Extra bloating rounds, each of: v, s1c, s2c")
      ->delimiter(',');
  cmd->add_option("--witnesses", f->witnesses, "Witness origin: quick, vertex, arrangement")
      ->check(CLI::IsMember({"quick", "vertex", "arrangement"}));
  cmd->add_option("--solver", f->solver, "Set cover solver: greedy, anneal, exact")
      ->check(CLI::IsMember({"greedy", "anneal", "exact"}));
  cmd->add_option("--max-iterations", f->max_iterations,
                  "Constraint-generation iteration cap");
  cmd->add_option("--patch-mode", f->patch_mode, "constraint-gen or patch-stop")
      ->check(CLI::IsMember({"constraint-gen", "patch-stop"}));
  cmd->add_option("--seed", f->seed, "Random seed; runs are deterministic given it");
  cmd->add_option("--sa-iterations", f->sa_iterations, "Annealing iterations");
  cmd->add_option("--sa-removals", f->sa_removals, "Sets removed per annealing step");
  cmd->add_option("--sa-temperature", f->sa_temperature,
                  "Temperature numerator: t = tau / iteration");
  cmd->add_option("--time-limit-s", f->time_limit_s,
                  "Budget for enumeration / exact solver, seconds "
                  "(env POLYCOVER_TIME_LIMIT_S overrides)");
}

PipelineConfig pipeline_config(const SolveFlags& f) {
  PipelineConfig cfg;
  cfg.collection.method = f.collection == "bk" ? CollectionMethod::BronKerbosch
                                               : CollectionMethod::Triangulation;
  cfg.collection.replication = f.replication;
  for (const std::string& r : f.rounds) {
    if (r == "v") cfg.collection.rounds.push_back(BloatSource::V);
    else if (r == "s1c") cfg.collection.rounds.push_back(BloatSource::S1OfC);
    else if (r == "s2c") cfg.collection.rounds.push_back(BloatSource::S2OfC);
    else throw ParseError("unknown bloat round: " + r);
  }
  cfg.collection.seed = f.seed;
  std::int64_t limit_s = f.time_limit_s;
  if (const char* env = std::getenv("POLYCOVER_TIME_LIMIT_S")) limit_s = std::atoll(env);
  cfg.collection.time_budget_ms = limit_s * 1000;
  cfg.witness_origin = f.witnesses == "vertex"        ? WitnessOrigin::Vertex
                       : f.witnesses == "arrangement" ? WitnessOrigin::Arrangement
                                                      : WitnessOrigin::QuickVertex;
  cfg.solver = f.solver == "greedy"   ? SolverKind::Greedy
               : f.solver == "anneal" ? SolverKind::Anneal
                                      : SolverKind::Exact;
  cfg.max_iterations = f.max_iterations;
  cfg.patch_mode = f.patch_mode == "patch-stop" ? PatchMode::PatchAndStop
                                                : PatchMode::ConstraintGen;
  cfg.seed = f.seed;
  cfg.anneal_iterations = f.sa_iterations;
  cfg.anneal_removals = f.sa_removals;
  cfg.anneal_temperature = f.sa_temperature;
  cfg.exact_budget_ms = limit_s * 1000;
  return cfg;
}

std::optional<std::size_t> reference_best(const std::string& path, const std::string& name) {
  if (path.empty()) return std::nullopt;
  Json j = Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains(name)) return std::nullopt;
  return j.at(name).get<std::size_t>();
}

int cmd_solve(const std::string& in, const std::string& out, const std::string& report_path,
              const std::string& ref_path, const SolveFlags& flags) {
  Instance inst = parse_instance(read_file(in));
  PipelineConfig cfg = pipeline_config(flags);
  auto [sol, report] = solve(inst, cfg);

  VerificationReport ver = verify(inst, sol);
  if (!ver.all_ok()) {
    std::cerr << "internal error: produced solution failed verification\n";
    return kExitPipelineError;
  }
  std::string out_path = out.empty() ? inst.name + ".solution.json" : out;
  write_file(out_path, write_solution(sol));
  if (auto best = reference_best(ref_path, inst.name)) {
    report.relative_size = relative_size(sol, *best);
    std::cout << "relative size " << report.relative_size->get_str() << "\n";
  }
  if (!report_path.empty()) write_file(report_path, report.to_json().dump(2));
  std::cout << "size " << sol.size() << " iterations " << report.iterations_used << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               bool allow_mismatch) {
  Instance inst = parse_instance(read_file(instance_path));
  Solution sol = parse_solution(read_file(solution_path));
  if (!allow_mismatch && !sol.instance_name.empty() && sol.instance_name != inst.name) {
    std::cerr << "instance name mismatch: instance is '" << inst.name
              << "', solution is for '" << sol.instance_name
              << "' (use --allow-name-mismatch to override)\n";
    return kExitInputError;
  }
  VerificationReport rep = verify(inst, sol);
  std::cout << "convexity " << (rep.convexity_ok ? "ok" : "FAIL") << "\n"
            << "containment " << (rep.containment_ok ? "ok" : "FAIL") << "\n"
            << "coverage " << (rep.coverage_ok ? "ok" : "FAIL")
            << " (uncovered components: " << rep.uncovered_components << ")\n"
            << "size " << rep.size << "\n";
  return rep.all_ok() ? kExitOk : kExitVerifyFail;
}

int cmd_enumerate(const std::string& in, const std::string& out, const std::string& points,
                  std::size_t max_polygons, std::int64_t time_limit_s) {
  Instance inst = parse_instance(read_file(in));
  PointSetKind kind = points == "vs1"   ? PointSetKind::VS1
                      : points == "vs2" ? PointSetKind::VS2
                                        : PointSetKind::V;
  if (const char* env = std::getenv("POLYCOVER_TIME_LIMIT_S")) time_limit_s = std::atoll(env);
  auto t0 = std::chrono::steady_clock::now();
  EnumerationResult en = enumerate_maximal_convex(inst.polygon, point_set(inst.polygon, kind),
                                                  {max_polygons, time_limit_s * 1000});
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  Collection col;
  col.polygons = en.polygons;
  col.method = "bk-" + points;
  col.truncated = en.truncated;
  if (!out.empty()) write_file(out, collection_to_json(col, inst.name).dump(2));
  std::cout << "polygons " << en.polygons.size() << " elapsed_ms " << ms
            << (en.truncated ? " TRUNCATED" : "") << "\n";
  return en.truncated ? kExitLimitExceeded : kExitOk;
}

int cmd_render(const std::string& in, const std::string& solution_path,
               const std::string& out, const RenderOptions& opt) {
  Instance inst = parse_instance(read_file(in));
  std::vector<ConvexPolygon> polys;
  if (!solution_path.empty()) {
    Solution sol = parse_solution(read_file(solution_path));
    for (const auto& ring : sol.polygons) {
      if (!ring_convex(ring)) throw ParseError("solution polygon is not convex");
      polys.push_back(convex_from_ring(ring));
    }
  }
  write_file(out, render_svg(inst.polygon, polys, opt));
  return kExitOk;
}

int cmd_merge(const std::string& in, const std::vector<std::string>& solution_paths,
              const std::string& out, const SolveFlags& flags) {
  Instance inst = parse_instance(read_file(in));
  std::vector<Solution> sols;
  for (const std::string& path : solution_paths) {
    Solution s = parse_solution(read_file(path));
    VerificationReport rep = verify(inst, s);
    if (!rep.all_ok()) {
      std::cerr << path << " does not verify against " << inst.name << "\n";
      return kExitVerifyFail;
    }
    sols.push_back(std::move(s));
  }
  PipelineConfig cfg = pipeline_config(flags);
  Solution merged = merge_solutions(inst, sols, cfg);
  std::string out_path = out.empty() ? inst.name + ".merged.json" : out;
  write_file(out_path, write_solution(merged));
  std::cout << "size " << merged.size() << "\n";
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& instances, std::size_t seeds,
              std::size_t workers, const std::string& out, const SolveFlags& flags) {
  struct Row {
    std::string name;
    std::uint64_t seed;
    std::size_t size = 0;
    std::size_t iterations = 0;
    std::size_t witnesses = 0;
    std::int64_t ms = 0;
    bool failed = false;
  };
  struct Task {
    std::string path;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (const std::string& path : instances)
    for (std::size_t s = 0; s < seeds; s++) tasks.push_back({path, flags.seed + s});

  std::vector<Row> rows(tasks.size());
  auto run_one = [&](std::size_t ti) {
    Row& row = rows[ti];
    row.seed = tasks[ti].seed;
    try {
      Instance inst = parse_instance(read_file(tasks[ti].path));
      row.name = inst.name;
      SolveFlags f = flags;
      f.seed = tasks[ti].seed;
      PipelineConfig cfg = pipeline_config(f);
      auto t0 = std::chrono::steady_clock::now();
      auto [sol, report] = solve(inst, cfg);
      row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
      row.size = sol.size();
      row.iterations = report.iterations_used;
      row.witnesses = report.witness_counts.empty() ? 0 : report.witness_counts.back();
    } catch (const std::exception& e) {
      row.name = tasks[ti].path;
      row.failed = true;
    }
  };

  if (workers < 1) workers = 1;
  for (std::size_t base = 0; base < tasks.size(); base += workers) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = base; i < std::min(base + workers, tasks.size()); i++)
      batch.push_back(std::async(std::launch::async, run_one, i));
    for (auto& f : batch) f.get();
  }

  std::ostringstream csv;
  csv << "instance,seed,solver,witnesses_kind,size,iterations,witnesses,ms,status\n";
  for (const Row& r : rows)
    csv << r.name << "," << r.seed << "," << flags.solver << "," << flags.witnesses << ","
        << r.size << "," << r.iterations << "," << r.witnesses << "," << r.ms << ","
        << (r.failed ? "failed" : "ok") << "\n";
  if (out.empty())
    std::cout << csv.str();
  else
    write_file(out, csv.str());
  bool any_failed = false;
  for (const Row& r : rows) any_failed = any_failed || r.failed;
  return any_failed ? kExitPipelineError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover a polygon with holes by few convex polygons"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Build a collection and solve set cover");
  std::string solve_in, solve_out, solve_report, solve_ref;
  SolveFlags solve_flags;
  solve_cmd->add_option("--in", solve_in, "Instance JSON")->required();
  solve_cmd->add_option("--out", solve_out, "Solution JSON output path");
  solve_cmd->add_option("--report", solve_report, "Run report JSON output path");
  solve_cmd->add_option("--ref-scores", solve_ref,
                        "JSON map instance name -> best known size");
  add_solve_flags(solve_cmd, &solve_flags);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Verify a solution file");
  std::string verify_inst, verify_sol;
  bool allow_mismatch = false;
  verify_cmd->add_option("--instance", verify_inst, "Instance JSON")->required();
  verify_cmd->add_option("--solution", verify_sol, "Solution JSON")->required();
  verify_cmd->add_flag("--allow-name-mismatch", allow_mismatch,
                       "Verify even when instance names differ");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate S-maximal convex polygons");
  std::string enum_in, enum_out, enum_points = "v";
  std::size_t enum_max = 200000;
  std::int64_t enum_limit_s = 60;
  enum_cmd->add_option("--in", enum_in, "Instance JSON")->required();
  enum_cmd->add_option("--out", enum_out, "Collection JSON output path");
  enum_cmd->add_option("--points", enum_points, "Point set: v, vs1, vs2")
      ->check(CLI::IsMember({"v", "vs1", "vs2"}));
  enum_cmd->add_option("--max-polygons", enum_max, "Polygon cap");
  enum_cmd->add_option("--time-limit-s", enum_limit_s, "Time budget, seconds");

  // render
  auto* render_cmd = app.add_subcommand("render", "Render instance and solution to SVG");
  std::string render_in, render_sol, render_out;
  RenderOptions render_opt;
  render_cmd->add_option("--in", render_in, "Instance JSON")->required();
  render_cmd->add_option("--solution", render_sol, "Solution or collection JSON");
  render_cmd->add_option("--out", render_out, "SVG output path")->required();
  render_cmd->add_option("--stroke-width", render_opt.stroke_width, "Stroke width");
  render_cmd->add_option("--fill-opacity", render_opt.fill_opacity, "Polygon fill opacity");
  render_cmd->add_flag("--show-uncovered", render_opt.show_uncovered,
                       "Hatch uncovered regions");

  // merge
  auto* merge_cmd = app.add_subcommand("merge", "Merge solutions and re-solve");
  std::string merge_in, merge_out;
  std::vector<std::string> merge_sols;
  SolveFlags merge_flags;
  merge_cmd->add_option("--in", merge_in, "Instance JSON")->required();
  merge_cmd->add_option("solutions", merge_sols, "Solution JSON files")->required();
  merge_cmd->add_option("--out", merge_out, "Merged solution output path");
  add_solve_flags(merge_cmd, &merge_flags);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run instances x seeds, emit CSV");
  std::vector<std::string> bench_instances;
  std::size_t bench_seeds = 3, bench_workers = 1;
  std::string bench_out;
  SolveFlags bench_flags;
  bench_cmd->add_option("instances", bench_instances, "Instance JSON files")->required();
  bench_cmd->add_option("--seeds", bench_seeds, "Seeds per instance");
  bench_cmd->add_option("--workers", bench_workers, "Concurrent runs");
  bench_cmd->add_option("--out", bench_out, "CSV output path (default stdout)");
  add_solve_flags(bench_cmd, &bench_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed())
      return cmd_solve(solve_in, solve_out, solve_report, solve_ref, solve_flags);
    if (verify_cmd->parsed()) return cmd_verify(verify_inst, verify_sol, allow_mismatch);
    if (enum_cmd->parsed())
      return cmd_enumerate(enum_in, enum_out, enum_points, enum_max, enum_limit_s);
    if (render_cmd->parsed()) return cmd_render(render_in, render_sol, render_out, render_opt);
    if (merge_cmd->parsed()) return cmd_merge(merge_in, merge_sols, merge_out, merge_flags);
    if (bench_cmd->parsed())
      return cmd_bench(bench_instances, bench_seeds, bench_workers, bench_out, bench_flags);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidPolygon& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ArrangementTooLarge& e) {
    std::cerr << "limit exceeded: " << e.what() << " (" << e.count << ")\n";
    return kExitLimitExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPipelineError;
  }
  return kExitInputError;
}
