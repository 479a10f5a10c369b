// Command-line front end: run the algorithm on a configuration, verify
// geodesic mutual visibility, generate target patterns, and drive
// verification campaigns.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gmv/algorithm.hpp"
#include "gmv/config_io.hpp"
#include "gmv/patterns.hpp"
#include "gmv/simulator.hpp"
#include "gmv/symmetry.hpp"
#include "gmv/visibility.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

gmv::Mode parse_mode(const std::string& name) {
  if (name == "asym") return gmv::Mode::Asym;
  if (name == "general") return gmv::Mode::General;
  if (name == "infinite") return gmv::Mode::Infinite;
  throw CLI::ValidationError("--mode must be asym, general or infinite");
}

void render_frame(std::ostream& out, const gmv::TraceEntry& e,
                  const std::optional<gmv::Cell>& guard) {
  const auto& g = e.config.grid;
  out << "cycle " << e.cycle << " task " << to_string(e.task) << "\n";
  gmv::Rect box = g.finite ? gmv::Rect{1, 1, g.rows, g.cols} : gmv::mbr(e.config);
  for (int r = box.top; r <= box.bottom; ++r) {
    for (int c = box.left; c <= box.right; ++c) {
      gmv::Cell cell{r, c};
      char ch = '.';
      if (e.config.occupied(cell)) ch = guard && *guard == cell ? 'G' : 'R';
      out << ch;
    }
    out << "\n";
  }
  out << "\n";
}

int cmd_run(const std::string& input, const std::string& mode_name, int budget_factor,
            std::optional<int> budget, const std::string& trace_path, bool render) {
  gmv::Configuration c = gmv::parse_config_file(input);
  gmv::Mode mode = parse_mode(mode_name);
  if (!c.grid.finite && mode != gmv::Mode::Infinite) mode = gmv::Mode::Infinite;
  gmv::validate_run_input(c, mode);

  gmv::RunOptions opts;
  opts.budget_factor = budget_factor;
  opts.budget = budget;
  auto [trace, rep] = gmv::run(c, mode, opts);

  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    out << gmv::trace_to_string(trace);
  }
  if (render) {
    for (const auto& e : trace.entries) render_frame(std::cout, e, std::nullopt);
  }
  std::cout << "cycles " << rep.cycles << "\n";
  std::cout << "L " << rep.extent << "\n";
  for (auto task : {gmv::TaskId::T1a, gmv::TaskId::T1b, gmv::TaskId::T1c, gmv::TaskId::T2,
                    gmv::TaskId::T3, gmv::TaskId::T4}) {
    auto it = rep.task_cycles.find(task);
    std::cout << "cycles_" << to_string(task) << " " << (it == rep.task_cycles.end() ? 0 : it->second)
              << "\n";
  }
  std::cout << "GMV " << (rep.final_gmv ? "true" : "false") << "\n";
  std::cout << "min-area " << (rep.final_min_area ? "true" : "false") << "\n";
  if (rep.violation) {
    std::cout << "violation " << *rep.violation << "\n";
    return rep.violation->starts_with("non-termination") ? kExitBudget : kExitVerificationFailure;
  }
  return rep.passed() ? kExitPass : kExitVerificationFailure;
}

int cmd_verify(const std::string& input) {
  gmv::Configuration c = gmv::parse_config_file(input);
  if (c.size() < 2) {
    std::cout << "GMV: true (degenerate)\n";
    return kExitPass;
  }
  gmv::GmvReport rep = gmv::is_gmv(c);
  std::cout << "GMV: " << (rep.holds ? "true" : "false") << "\n";
  if (!rep.holds && rep.first_violating_pair) {
    const auto& [u, v] = *rep.first_violating_pair;
    std::cout << "pair: (" << u.row << "," << u.col << ")-(" << v.row << "," << v.col << ")\n";
  }
  std::cout << "area: " << rep.area << "\n";
  if (rep.holds) {
    std::cout << "min-area: " << (gmv::certify_min_area(c) ? "true" : "false") << "\n";
  } else {
    std::cout << "min-area: n/a\n";
  }
  gmv::SymmetryInfo info = gmv::rotation_group(c);
  std::cout << "rho: " << info.rho << "\n";
  std::cout << "tc: ";
  if (info.tc == 0) std::cout << "n/a\n";
  else std::cout << info.tc << "\n";
  std::cout << "LSS: " << gmv::lss(c).lss << "\n";
  return rep.holds ? kExitPass : kExitVerificationFailure;
}

int cmd_pattern(int n, std::optional<int> rho, std::optional<int> tc) {
  const gmv::Pattern* p;
  if (rho) {
    if (!tc) throw CLI::ValidationError("--rho requires --tc");
    p = &gmv::sym_pattern(n, *rho, *tc);
  } else {
    p = &gmv::asym_pattern(n);
  }
  gmv::Configuration c =
      gmv::Configuration::make(gmv::GridSpec::make_finite(p->box_rows, p->box_cols), p->cells);
  std::cout << gmv::config_to_string(c);
  return kExitPass;
}

int cmd_campaign(const std::string& grid_arg, int n, bool exhaustive, long long random_runs,
                 uint64_t seed, const std::string& mode_name, const std::string& out_path,
                 bool dedup, int jobs) {
  int rows = 0, cols = 0;
  char x = 0;
  std::istringstream ss(grid_arg);
  if (!(ss >> rows >> x >> cols) || x != 'x' || rows < 1 || cols < 1)
    throw CLI::ValidationError("--grid must look like 12x12");
  gmv::CampaignSpec spec;
  spec.grid = gmv::GridSpec::make_finite(rows, cols);
  spec.robots = n;
  spec.mode = parse_mode(mode_name);
  spec.exhaustive = exhaustive;
  spec.runs = random_runs;
  spec.seed = seed;
  spec.dedup_rotations = dedup;
  spec.jobs = jobs;

  if (spec.mode != gmv::Mode::Infinite) {
    const int k = (n + 1) / 2;
    if (rows < k || cols < k)
      throw CLI::ValidationError("grid must have at least ceil(n/2) rows and columns");
  }

  gmv::CampaignReport rep = gmv::campaign(spec);
  std::cout << rep.executed << " runs, " << rep.passed << " pass\n";
  std::cout << "max cycles " << rep.max_cycles << "\n";
  std::cout << "max cycles/L " << rep.max_cycles_per_extent << "\n";
  for (const auto& [what, count] : rep.failures)
    std::cout << "failure " << count << "x: " << what << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << gmv::campaign_tsv(rep);
  }
  return rep.passed == rep.executed ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic mutual visibility on grids: simulator and verifier"};
  app.require_subcommand(1);

  std::string input, mode = "general", trace_path, grid_arg, out_path;
  int budget_factor = 20;
  std::optional<int> budget;
  bool render = false;

  auto* runc = app.add_subcommand("run", "Run the algorithm on a configuration");
  runc->add_option("input", input, "configuration file")->required();
  runc->add_option("--mode", mode, "asym|general|infinite");
  runc->add_option("--budget-factor", budget_factor, "cycles allowed per unit of L");
  int budget_value = -1;
  runc->add_option("--budget", budget_value, "absolute cycle budget");
  runc->add_option("--trace", trace_path, "write a per-cycle trace file");
  runc->add_flag("--render", render, "print an ASCII frame per cycle");

  auto* verifyc = app.add_subcommand("verify", "Verify geodesic mutual visibility");
  verifyc->add_option("input", input, "configuration file")->required();

  int pat_n = 0;
  std::optional<int> pat_rho, pat_tc;
  auto* patternc = app.add_subcommand("pattern", "Print a target pattern");
  patternc->add_option("n", pat_n, "robot count")->required();
  int rho_value = 0, tc_value = 0;
  auto* rho_opt = patternc->add_option("--rho", rho_value, "2 or 4");
  auto* tc_opt = patternc->add_option("--tc", tc_value, "1, 2 or 3");

  int camp_n = 0, jobs = 0;
  long long random_runs = 0;
  uint64_t seed = 0;
  bool exhaustive = false, dedup = false;
  auto* campaignc = app.add_subcommand("campaign", "Run a verification campaign");
  campaignc->add_option("--grid", grid_arg, "MxN")->required();
  campaignc->add_option("--n", camp_n, "robot count")->required();
  campaignc->add_flag("--exhaustive", exhaustive, "enumerate all placements");
  campaignc->add_option("--random", random_runs, "number of random runs");
  campaignc->add_option("--seed", seed, "random seed");
  campaignc->add_option("--mode", mode, "asym|general|infinite");
  campaignc->add_option("--out", out_path, "write per-run TSV");
  campaignc->add_flag("--dedup", dedup, "deduplicate rotations in exhaustive mode");
  campaignc->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (runc->parsed()) {
      if (budget_value >= 0) budget = budget_value;
      return cmd_run(input, mode, budget_factor, budget, trace_path, render);
    }
    if (verifyc->parsed()) return cmd_verify(input);
    if (patternc->parsed()) {
      if (rho_opt->count()) pat_rho = rho_value;
      if (tc_opt->count()) pat_tc = tc_value;
      return cmd_pattern(pat_n, pat_rho, pat_tc);
    }
    if (campaignc->parsed()) {
      if (!exhaustive && random_runs <= 0)
        throw CLI::ValidationError("choose --exhaustive or --random K");
      return cmd_campaign(grid_arg, camp_n, exhaustive, random_runs, seed, mode, out_path,
                          dedup, jobs);
    }
  } catch (const gmv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gmv::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
