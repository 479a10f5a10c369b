#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmv/algorithm.hpp"

namespace gmv {

struct TraceEntry {
  int cycle = 0;
  Configuration config;
  TaskId task = TaskId::T5;
  MovePlan plan;
};

struct Trace {
  std::vector<TraceEntry> entries;
  bool terminal = false;
};

struct RunReport {
  int cycles = 0;
  int extent = 0;  // L: side of the smallest square covering the execution
  std::map<TaskId, int> task_cycles;
  bool final_gmv = false;
  bool final_min_area = false;
  long long expected_area = 0;
  std::optional<std::string> violation;

  bool passed() const { return !violation && final_gmv && final_min_area; }
};

// Apply a plan simultaneously; validates move legality, collision freedom
// and robot-count preservation.
Configuration apply_plan(const Configuration& c, const MovePlan& plan);

// One fully synchronous cycle.
Configuration step(const Configuration& c, Mode mode);

struct RunOptions {
  int budget_factor = 20;     // cycles allowed per unit of the extent bound
  std::optional<int> budget;  // absolute override
  bool record_trace = true;
};

std::pair<Trace, RunReport> run(const Configuration& c, Mode mode,
                                const RunOptions& opts = {});

// One line per cycle: "cycle <k> task <T> robots (r,c) ..." in row-major order.
std::string trace_to_string(const Trace& t);

struct CampaignSpec {
  GridSpec grid;  // finite grid, or the sampling box for infinite campaigns
  int robots = 0;
  bool exhaustive = false;
  long long runs = 0;  // random campaigns
  uint64_t seed = 0;
  Mode mode = Mode::General;
  bool dedup_rotations = false;
  int budget_factor = 20;
  int jobs = 0;  // 0: hardware concurrency
};

struct RunStat {
  long long id = 0;
  int extent = 0;
  int cycles = 0;
  std::array<int, 6> per_task{};  // T1a, T1b, T1c, T2, T3, T4
  bool pass = false;
};

struct CampaignReport {
  long long generated = 0;
  long long executed = 0;
  long long passed = 0;
  int max_cycles = 0;
  double max_cycles_per_extent = 0.0;
  std::map<std::string, long long> failures;
  std::vector<RunStat> stats;  // deterministic order
};

CampaignReport campaign(const CampaignSpec& spec);

std::string campaign_tsv(const CampaignReport& rep);

}  // namespace gmv
