#include "gmv/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "gmv/symmetry.hpp"
#include "gmv/visibility.hpp"

namespace gmv {

namespace {

int task_order(TaskId t) {
  switch (t) {
    case TaskId::T1a: return 0;
    case TaskId::T1b: return 1;
    case TaskId::T1c: return 2;
    case TaskId::T2: return 3;
    case TaskId::T3: return 4;
    case TaskId::T4: return 5;
    case TaskId::T5: return 6;
  }
  return -1;
}

bool transition_allowed(Mode mode, TaskId from, TaskId to) {
  if (mode == Mode::Asym) {
    switch (from) {
      case TaskId::T1a: return to == TaskId::T1a || to == TaskId::T1b;
      case TaskId::T1b:
        return to == TaskId::T1b || to == TaskId::T2 || to == TaskId::T3 || to == TaskId::T4;
      case TaskId::T1c: return to == TaskId::T2 || to == TaskId::T3 || to == TaskId::T4;
      case TaskId::T2: return to == TaskId::T2 || to == TaskId::T3 || to == TaskId::T4;
      case TaskId::T3: return to == TaskId::T3 || to == TaskId::T4;
      case TaskId::T4: return to == TaskId::T5;
      case TaskId::T5: return to == TaskId::T5;
    }
    return false;
  }
  // General and infinite modes: tasks never regress, and the corner
  // evacuation still finishes in a single cycle.
  if (from == TaskId::T1c && to == TaskId::T1c) return false;
  return task_order(to) >= task_order(from);
}

}  // namespace

Configuration apply_plan(const Configuration& c, const MovePlan& plan) {
  std::vector<Cell> next = c.robots;
  std::map<Cell, Cell> moved;
  for (const auto& [src, dst] : plan.moves) {
    if (!c.occupied(src)) throw InternalError("plan moves a non-robot");
    if (manhattan(src, dst) > 1) throw InternalError("plan moves more than one edge");
    if (!c.grid.contains(dst)) throw InternalError("plan moves off the grid");
    moved[src] = dst;
  }
  for (Cell& r : next) {
    auto it = moved.find(r);
    if (it != moved.end()) r = it->second;
  }
  std::sort(next.begin(), next.end());
  if (std::adjacent_find(next.begin(), next.end()) != next.end())
    throw InternalError("plan creates a multiplicity");
  Configuration out;
  out.grid = c.grid;
  out.robots = std::move(next);
  return out;
}

Configuration step(const Configuration& c, Mode mode) {
  return apply_plan(c, compute_plan(c, mode));
}

namespace {

int budget_for(const Configuration& c, Mode mode, const RunOptions& opts) {
  if (opts.budget) return *opts.budget;
  int bound;
  if (c.grid.finite) {
    bound = std::max(c.grid.rows, c.grid.cols);
  } else {
    Rect box = mbr(c);
    const int w = std::max(box.height(), box.width());
    const int k = (c.size() + 1) / 2;
    bound = 4 * std::max(w, k) + 2;
  }
  (void)mode;
  return opts.budget_factor * bound;
}

}  // namespace

std::pair<Trace, RunReport> run(const Configuration& c, Mode mode, const RunOptions& opts) {
  validate_run_input(c, mode);
  Trace trace;
  RunReport rep;

  // The final pattern's area depends on the input's symmetry class.
  const int n = c.size();
  if (!c.grid.finite) {
    rep.expected_area = min_area(n);
  } else {
    SymmetryInfo info = rotation_group(c);
    if (info.grid_order > 1 && info.rho > 1) {
      const Pattern& p = sym_pattern(n, info.rho, info.tc);
      rep.expected_area = 1LL * p.box_rows * p.box_cols;
    } else {
      rep.expected_area = min_area(n);
    }
  }

  const int budget = budget_for(c, mode, opts);
  Configuration cur = c;
  Rect footprint = mbr(cur);
  std::optional<TaskId> prev;
  for (;;) {
    MovePlan plan = compute_plan(cur, mode);
    if (prev && !transition_allowed(mode, *prev, plan.task)) {
      rep.violation = "illegal transition " + std::string(to_string(*prev)) + "->" +
                      std::string(to_string(plan.task));
      break;
    }
    prev = plan.task;
    if (opts.record_trace) trace.entries.push_back({rep.cycles, cur, plan.task, plan});
    if (plan.task == TaskId::T5) {
      if (!plan.empty()) {
        rep.violation = "terminal task with pending moves";
        break;
      }
      trace.terminal = true;
      break;
    }
    if (plan.empty()) {
      rep.violation = "stalled: no move in task " + std::string(to_string(plan.task));
      break;
    }
    if (rep.cycles >= budget) {
      rep.violation = "non-termination within budget";
      break;
    }
    cur = apply_plan(cur, plan);
    if (cur.size() != c.size()) {
      rep.violation = "robot count changed";
      break;
    }
    Rect now = mbr(cur);
    footprint.top = std::min(footprint.top, now.top);
    footprint.left = std::min(footprint.left, now.left);
    footprint.bottom = std::max(footprint.bottom, now.bottom);
    footprint.right = std::max(footprint.right, now.right);
    ++rep.task_cycles[plan.task];
    ++rep.cycles;
  }
  rep.extent = std::max(footprint.height(), footprint.width());
  GmvReport gmv = is_gmv(cur);
  rep.final_gmv = gmv.holds && !gmv.degenerate;
  rep.final_min_area = rep.final_gmv && gmv.area == rep.expected_area;
  return {std::move(trace), std::move(rep)};
}

std::string trace_to_string(const Trace& t) {
  std::ostringstream out;
  for (const TraceEntry& e : t.entries) {
    out << "cycle " << e.cycle << " task " << to_string(e.task) << " robots";
    for (const Cell& r : e.config.robots) out << " (" << r.row << "," << r.col << ")";
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<Cell> all_cells(const GridSpec& g) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(g.rows) * g.cols);
  for (int r = 1; r <= g.rows; ++r)
    for (int c = 1; c <= g.cols; ++c) cells.push_back({r, c});
  return cells;
}

// Rotations mapping the finite grid onto itself.
std::vector<std::vector<Cell>> grid_rotations(const GridSpec& g, const std::vector<Cell>& cells) {
  std::vector<std::vector<Cell>> out;
  const Center ctr = grid_center(g);
  std::vector<int> turns = g.rows == g.cols ? std::vector<int>{1, 2, 3} : std::vector<int>{2};
  for (int t : turns) {
    std::vector<Cell> rot;
    rot.reserve(cells.size());
    for (const Cell& c : cells) rot.push_back(rotate_cell(c, ctr, t));
    std::sort(rot.begin(), rot.end());
    out.push_back(std::move(rot));
  }
  return out;
}

struct RunOutcome {
  RunStat stat;
  std::string failure;  // empty when passed
  bool executed = false;
};

RunOutcome execute_one(const GridSpec& grid, const std::vector<Cell>& cells, Mode mode,
                       long long id, int budget_factor) {
  RunOutcome out;
  out.executed = true;
  out.stat.id = id;
  try {
    Configuration c = Configuration::make(grid, cells);
    Mode effective = mode;
    if (mode == Mode::Asym && rotation_group(c).grid_order != 1) effective = Mode::General;
    RunOptions opts;
    opts.budget_factor = budget_factor;
    opts.record_trace = false;
    auto [trace, rep] = run(c, effective, opts);
    out.stat.extent = rep.extent;
    out.stat.cycles = rep.cycles;
    out.stat.per_task = {rep.task_cycles[TaskId::T1a], rep.task_cycles[TaskId::T1b],
                         rep.task_cycles[TaskId::T1c], rep.task_cycles[TaskId::T2],
                         rep.task_cycles[TaskId::T3], rep.task_cycles[TaskId::T4]};
    if (rep.violation) {
      out.failure = *rep.violation;
    } else if (!rep.final_gmv) {
      out.failure = "final configuration not in geodesic mutual visibility";
    } else if (!rep.final_min_area) {
      out.failure = "final bounding rectangle not of expected area";
    } else {
      out.stat.pass = true;
    }
  } catch (const std::exception& e) {
    out.failure = std::string("exception: ") + e.what();
  }
  return out;
}

}  // namespace

CampaignReport campaign(const CampaignSpec& spec) {
  if (spec.robots < 2) throw DomainError("campaign requires at least 2 robots");
  CampaignReport rep;

  std::vector<std::vector<Cell>> inputs;
  if (spec.exhaustive) {
    if (!spec.grid.finite) throw DomainError("exhaustive campaigns require a finite grid");
    auto cells = all_cells(spec.grid);
    const int m = static_cast<int>(cells.size());
    const int n = spec.robots;
    if (n > m) throw DomainError("more robots than grid cells");
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
      std::vector<Cell> chosen;
      chosen.reserve(n);
      for (int i : idx) chosen.push_back(cells[i]);
      ++rep.generated;
      bool take = true;
      if (spec.dedup_rotations) {
        for (const auto& rot : grid_rotations(spec.grid, chosen))
          if (rot < chosen) {
            take = false;
            break;
          }
      }
      if (take) inputs.push_back(std::move(chosen));
      // next combination
      int i = n - 1;
      while (i >= 0 && idx[i] == m - n + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    if (spec.runs <= 0) throw DomainError("random campaigns need a positive run count");
    GridSpec box = spec.grid.finite ? spec.grid : GridSpec::make_finite(spec.grid.rows, spec.grid.cols);
    auto cells = all_cells(box);
    if (spec.robots > static_cast<int>(cells.size()))
      throw DomainError("more robots than sampling cells");
    std::mt19937_64 rng(spec.seed);
    for (long long r = 0; r < spec.runs; ++r) {
      std::vector<Cell> pool = cells;
      std::vector<Cell> chosen;
      for (int i = 0; i < spec.robots; ++i) {
        size_t j = i + static_cast<size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
        chosen.push_back(pool[i]);
      }
      ++rep.generated;
      inputs.push_back(std::move(chosen));
    }
  }

  const GridSpec run_grid = spec.mode == Mode::Infinite ? GridSpec::make_infinite() : spec.grid;
  std::vector<RunOutcome> outcomes(inputs.size());
  unsigned jobs = spec.jobs > 0 ? spec.jobs : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>(jobs, inputs.size() == 0 ? 1 : inputs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= inputs.size()) break;
      outcomes[i] = execute_one(run_grid, inputs[i], spec.mode, static_cast<long long>(i),
                                spec.budget_factor);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const RunOutcome& o : outcomes) {
    if (!o.executed) continue;
    ++rep.executed;
    rep.stats.push_back(o.stat);
    if (o.stat.pass) {
      ++rep.passed;
    } else {
      ++rep.failures[o.failure];
    }
    rep.max_cycles = std::max(rep.max_cycles, o.stat.cycles);
    if (o.stat.extent > 0)
      rep.max_cycles_per_extent = std::max(
          rep.max_cycles_per_extent, static_cast<double>(o.stat.cycles) / o.stat.extent);
  }
  return rep;
}

std::string campaign_tsv(const CampaignReport& rep) {
  std::ostringstream out;
  out << "run\tL\tcycles\tt1a\tt1b\tt1c\tt2\tt3\tt4\n";
  for (const RunStat& s : rep.stats) {
    out << s.id << '\t' << s.extent << '\t' << s.cycles;
    for (int v : s.per_task) out << '\t' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace gmv
