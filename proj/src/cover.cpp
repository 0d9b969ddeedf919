#include "polycover/cover.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>

namespace polycover {

namespace {

using Clock = std::chrono::steady_clock;

void finish_reverse(CoverInstance* ci) {
  ci->reverse.assign(ci->n_sets, {});
  for (std::size_t w = 0; w < ci->membership.size(); w++)
    for (int s : ci->membership[w]) ci->reverse[s].push_back(static_cast<int>(w));
}

}  // namespace

CoverInstance build_cover_instance(const std::vector<ConvexPolygon>& polys,
                                   const WitnessSet& ws) {
  CoverInstance ci;
  ci.n_sets = polys.size();
  ci.n_witnesses = ws.witnesses.size();
  ci.membership.resize(ci.n_witnesses);
  for (std::size_t w = 0; w < ws.witnesses.size(); w++) {
    for (std::size_t s = 0; s < polys.size(); s++)
      if (covers(polys[s], ws.witnesses[w]))
        ci.membership[w].push_back(static_cast<int>(s));
    if (ci.membership[w].empty())
      throw UncoveredWitness("witness " + std::to_string(w) +
                                 " is covered by no collection polygon",
                             w);
  }
  finish_reverse(&ci);
  return ci;
}

CoverInstance cover_instance_from_rows(std::size_t n_sets,
                                       std::vector<std::vector<int>> rows) {
  CoverInstance ci;
  ci.n_sets = n_sets;
  ci.n_witnesses = rows.size();
  ci.membership = std::move(rows);
  for (std::size_t w = 0; w < ci.membership.size(); w++) {
    auto& row = ci.membership[w];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (row.empty())
      throw UncoveredWitness("witness " + std::to_string(w) + " has an empty row", w);
    if (row.front() < 0 || row.back() >= static_cast<int>(n_sets))
      throw ParseError("set index out of range in cover instance");
  }
  finish_reverse(&ci);
  return ci;
}

namespace {

struct CoverState {
  const CoverInstance& ci;
  std::vector<int> cover_count;  // per witness: chosen sets covering it
  std::vector<int> gain;         // per set: uncovered witnesses it would cover
  std::vector<char> in_solution;
  std::vector<int> chosen;  // insertion order
  std::size_t uncovered;

  explicit CoverState(const CoverInstance& inst)
      : ci(inst),
        cover_count(inst.n_witnesses, 0),
        gain(inst.n_sets, 0),
        in_solution(inst.n_sets, 0),
        uncovered(inst.n_witnesses) {
    for (std::size_t s = 0; s < inst.n_sets; s++)
      gain[s] = static_cast<int>(inst.reverse[s].size());
  }

  void add(int s) {
    assert(!in_solution[s]);
    in_solution[s] = 1;
    chosen.push_back(s);
    for (int w : ci.reverse[s]) {
      if (cover_count[w]++ == 0) {
        uncovered--;
        for (int t : ci.membership[w]) gain[t]--;
      }
    }
  }

  void remove(int s) {
    assert(in_solution[s]);
    in_solution[s] = 0;
    chosen.erase(std::find(chosen.begin(), chosen.end(), s));
    for (int w : ci.reverse[s]) {
      if (--cover_count[w] == 0) {
        uncovered++;
        for (int t : ci.membership[w]) gain[t]++;
      }
    }
  }

  bool removable(int s) const {
    for (int w : ci.reverse[s])
      if (cover_count[w] < 2) return false;
    return true;
  }

  void repair_greedy(Rng& rng) {
    std::vector<int> ties;
    while (uncovered > 0) {
      int best = -1;
      ties.clear();
      for (std::size_t s = 0; s < ci.n_sets; s++) {
        if (in_solution[s] || gain[s] == 0) continue;
        if (best < 0 || gain[s] > gain[best]) {
          best = static_cast<int>(s);
          ties.assign(1, best);
        } else if (gain[s] == gain[best]) {
          ties.push_back(static_cast<int>(s));
        }
      }
      assert(best >= 0);  // every witness has a coverer
      add(static_cast<int>(ties[rng.below(ties.size())]));
    }
  }

  void drop_redundant() {
    // Insertion order; earlier picks become unnecessary most often.
    std::vector<int> order = chosen;
    for (int s : order)
      if (removable(s)) remove(s);
  }
};

}  // namespace

CoverSolution greedy_cover(const CoverInstance& ci, Rng& rng) {
  CoverState st(ci);
  st.repair_greedy(rng);
  st.drop_redundant();
  CoverSolution sol;
  sol.chosen = st.chosen;
  return sol;
}

CoverSolution anneal_cover(const CoverInstance& ci, const AnnealParams& params) {
  Rng rng(params.rng_seed);
  CoverState st(ci);
  st.repair_greedy(rng);
  st.drop_redundant();
  std::vector<int> best = st.chosen;
  std::size_t lb = cover_lower_bound(ci);

  for (std::size_t iter = 1; iter <= params.iterations; iter++) {
    if (best.size() <= lb) break;  // proven optimal; annealing cannot help
    std::size_t prev_size = st.chosen.size();
    std::vector<int> prev = st.chosen;
    std::size_t k = std::min(params.removals_per_step,
                             st.chosen.empty() ? 0 : st.chosen.size() - 1);
    for (std::size_t r = 0; r < k; r++)
      st.remove(st.chosen[rng.below(st.chosen.size())]);
    st.repair_greedy(rng);
    st.drop_redundant();

    bool accept = st.chosen.size() <= prev_size;
    if (!accept) {
      // d = (prev - new) / prev < 0; acceptance is e^{100 d / t} with
      // t = numerator / i. The exponent is exact; only the final
      // comparison runs at double precision.
      Rat d = (Rat(static_cast<unsigned long>(prev_size)) -
               Rat(static_cast<unsigned long>(st.chosen.size()))) /
              Rat(static_cast<unsigned long>(prev_size));
      Rat exponent = Rat(100) * d * Rat(static_cast<unsigned long>(iter)) /
                     params.temperature_numerator;
      accept = rng.uniform() < std::exp(exponent.get_d());
    }
    if (accept) {
      if (st.chosen.size() < best.size()) best = st.chosen;
    } else {
      // Roll back to the previous solution.
      std::vector<int> cur = st.chosen;
      for (int s : cur) st.remove(s);
      for (int s : prev) st.add(s);
    }
  }

  CoverSolution sol;
  sol.chosen = std::move(best);
  sol.lower_bound = lb;
  sol.optimal = sol.chosen.size() == lb;
  return sol;
}

std::size_t cover_lower_bound(const CoverInstance& ci) {
  if (ci.n_witnesses == 0) return 0;
  std::size_t max_size = 0;
  for (const auto& r : ci.reverse) max_size = std::max(max_size, r.size());
  std::size_t by_size = (ci.n_witnesses + max_size - 1) / max_size;

  // Pairwise-disjoint-membership witnesses each need their own set.
  std::vector<std::size_t> order(ci.n_witnesses);
  for (std::size_t w = 0; w < ci.n_witnesses; w++) order[w] = w;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ci.membership[a].size() < ci.membership[b].size();
  });
  std::vector<char> used(ci.n_sets, 0);
  std::size_t disjoint = 0;
  for (std::size_t w : order) {
    bool free = true;
    for (int s : ci.membership[w])
      if (used[s]) {
        free = false;
        break;
      }
    if (!free) continue;
    for (int s : ci.membership[w]) used[s] = 1;
    disjoint++;
  }
  return std::max(by_size, disjoint);
}

namespace {

struct ExactSolver {
  const CoverInstance& ci;
  Clock::time_point deadline;
  bool timed_out = false;
  std::vector<int> incumbent;
  std::vector<int> cover_count;
  std::vector<int> avail_count;  // per witness: non-excluded coverers
  std::vector<char> excluded;
  std::vector<char> in_solution;
  std::vector<int> gain;
  std::vector<int> chosen;
  std::size_t uncovered;

  ExactSolver(const CoverInstance& inst, Clock::time_point dl)
      : ci(inst),
        deadline(dl),
        cover_count(inst.n_witnesses, 0),
        avail_count(inst.n_witnesses, 0),
        excluded(inst.n_sets, 0),
        in_solution(inst.n_sets, 0),
        gain(inst.n_sets, 0),
        uncovered(inst.n_witnesses) {
    for (std::size_t w = 0; w < inst.n_witnesses; w++)
      avail_count[w] = static_cast<int>(inst.membership[w].size());
    for (std::size_t s = 0; s < inst.n_sets; s++)
      gain[s] = static_cast<int>(inst.reverse[s].size());
  }

  void add(int s) {
    in_solution[s] = 1;
    chosen.push_back(s);
    for (int w : ci.reverse[s])
      if (cover_count[w]++ == 0) {
        uncovered--;
        for (int t : ci.membership[w]) gain[t]--;
      }
  }
  void undo_add(int s) {
    in_solution[s] = 0;
    chosen.pop_back();
    for (int w : ci.reverse[s])
      if (--cover_count[w] == 0) {
        uncovered++;
        for (int t : ci.membership[w]) gain[t]++;
      }
  }

  std::size_t bound() const {
    int max_gain = 0;
    for (std::size_t s = 0; s < ci.n_sets; s++)
      if (!excluded[s] && !in_solution[s]) max_gain = std::max(max_gain, gain[s]);
    if (max_gain == 0) return ci.n_sets + 1;  // uncoverable from here
    std::size_t by_size = (uncovered + max_gain - 1) / max_gain;

    std::vector<char> used(ci.n_sets, 0);
    std::size_t disjoint = 0;
    for (std::size_t w = 0; w < ci.n_witnesses; w++) {
      if (cover_count[w] > 0) continue;
      bool free = true;
      for (int s : ci.membership[w])
        if (!excluded[s] && used[s]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int s : ci.membership[w])
        if (!excluded[s]) used[s] = 1;
      disjoint++;
    }
    return std::max(by_size, disjoint);
  }

  std::size_t node_counter = 0;

  bool over_deadline() {
    if (timed_out) return true;
    if ((++node_counter & 0x3ff) == 0 && Clock::now() > deadline) timed_out = true;
    return timed_out;
  }

  // The exclude branch runs as a loop so recursion depth is bounded by
  // the incumbent size, not by the number of sets.
  void search() {
    if (over_deadline()) return;
    if (uncovered == 0) {
      if (chosen.size() < incumbent.size()) incumbent = chosen;
      return;
    }
    std::vector<int> locally_excluded;
    while (!over_deadline()) {
      if (chosen.size() + bound() >= incumbent.size()) break;
      bool infeasible = false;
      for (std::size_t w = 0; w < ci.n_witnesses && !infeasible; w++)
        if (cover_count[w] == 0 && avail_count[w] == 0) infeasible = true;
      if (infeasible) break;

      int pick = -1;
      for (std::size_t s = 0; s < ci.n_sets; s++) {
        if (excluded[s] || in_solution[s] || gain[s] == 0) continue;
        if (pick < 0 || gain[s] > gain[pick]) pick = static_cast<int>(s);
      }
      if (pick < 0) break;

      add(pick);
      search();
      undo_add(pick);

      excluded[pick] = 1;
      locally_excluded.push_back(pick);
      for (int w : ci.reverse[pick]) avail_count[w]--;
    }
    for (int s : locally_excluded) {
      excluded[s] = 0;
      for (int w : ci.reverse[s]) avail_count[w]++;
    }
  }
};

}  // namespace

CoverSolution exact_cover(const CoverInstance& ci, std::int64_t time_budget_ms) {
  Rng rng(0);
  CoverSolution greedy = greedy_cover(ci, rng);
  std::size_t root_lb = cover_lower_bound(ci);

  CoverSolution sol;
  if (greedy.size() == root_lb) {
    sol.chosen = greedy.chosen;
    sol.lower_bound = root_lb;
    sol.optimal = true;
    return sol;
  }

  ExactSolver solver(ci, Clock::now() + std::chrono::milliseconds(time_budget_ms));
  solver.incumbent = greedy.chosen;
  solver.search();

  sol.chosen = solver.incumbent;
  sol.optimal = !solver.timed_out;
  sol.lower_bound = sol.optimal ? sol.chosen.size() : root_lb;
  return sol;
}

Json cover_instance_to_json(const CoverInstance& ci) {
  Json j;
  j["n_sets"] = ci.n_sets;
  Json rows = Json::array();
  for (const auto& row : ci.membership) rows.push_back(row);
  j["witnesses"] = rows;
  return j;
}

CoverInstance cover_instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n_sets") || !j.contains("witnesses"))
    throw ParseError("cover instance needs n_sets and witnesses");
  std::vector<std::vector<int>> rows;
  for (const Json& row : j.at("witnesses")) rows.push_back(row.get<std::vector<int>>());
  return cover_instance_from_rows(j.at("n_sets").get<std::size_t>(), std::move(rows));
}

}  // namespace polycover
