#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gmv/grid.hpp"
#include "gmv/patterns.hpp"

namespace gmv {

enum class TaskId { T1a, T1b, T1c, T2, T3, T4, T5 };
const char* to_string(TaskId t);

enum class Mode { Asym, General, Infinite };

// One synchronous round of movement: every source moves to its destination
// simultaneously. Destinations are at most one edge away and, together with
// the unmoved robots, pairwise distinct.
struct MovePlan {
  TaskId task = TaskId::T5;
  std::vector<std::pair<Cell, Cell>> moves;  // src -> dst, sorted by src

  bool empty() const { return moves.empty(); }
};

struct SpecialPath {
  Cell corner;
  std::vector<Cell> vertices;  // starts at the corner
};

// The four per-corner inward paths used to evacuate corners, in corner
// order TL, TR, BR, BL. Requires a rect of at least 4x4.
std::array<SpecialPath, 4> special_paths(const Rect& rect);

struct RowAccount {
  int robots = 0;         // n_l
  int targets = 0;        // t_l
  int robots_above = 0;   // R_l
  int robots_below = 0;   // R'_l
  int targets_above = 0;  // T_l
  int targets_below = 0;  // T'_l
  int excess_above = 0;   // B_l = (R_l + n_l) monus (T_l + t_l)
  int excess_below = 0;   // A_l = (R'_l + n_l) monus (T'_l + t_l)
  int move_down = 0;      // RD_l = n_l - (n_l monus B_l)
  int move_up = 0;        // RU_l = n_l - (n_l monus A_l)
};

// Index 0 is unused; rows are 1-based.
std::vector<RowAccount> row_accounts(const std::vector<int>& robots_per_row,
                                     const std::vector<int>& targets_per_row);

// Canonical board for the row-balancing task: the guard (when present) sits
// on the top-right cell, rows grow downward, targets exclude the guard's
// own target.
struct T2Board {
  int rows = 0;
  int col_lo = 1;
  int col_hi = 0;
  bool protection = false;    // exclude outermost columns from selection
  bool corner_rules = true;   // finite-grid corner exceptions
  double side_center = 0.0;   // side-steps go left iff col > side_center
  std::optional<Cell> guard;
  std::optional<Cell> forbidden;  // cell no move may enter (shared-row center)
  std::vector<Cell> robots;   // excluding the guard
  std::vector<Cell> targets;  // excluding the guard's target
};

struct T2Outcome {
  std::vector<std::vector<Cell>> up;    // U_l per row, index 1-based
  std::vector<std::vector<Cell>> down;  // D_l per row
  std::map<Cell, Cell> dest;            // all robots and the guard
};

T2Outcome t2_compute(const T2Board& b);
std::map<Cell, Cell> t3_compute(const T2Board& b);
bool t2_balanced(const T2Board& b);

TaskId classify(const Configuration& c, Mode mode);

// The robot with maximum total distance, minimum view on ties. Requires an
// asymmetric configuration.
Cell elect_guard(const Configuration& c);

MovePlan move_t1a(const Configuration& c);
MovePlan move_t1b(const Configuration& c);
MovePlan move_t1c(const Configuration& c);
MovePlan move_t2(const Configuration& c);
MovePlan move_t3(const Configuration& c);
MovePlan move_t4(const Configuration& c);

MovePlan symmetric_driver(const Configuration& c);
MovePlan infinite_driver(const Configuration& c);

// Snapshot-to-plan dispatch for the given mode.
MovePlan compute_plan(const Configuration& c, Mode mode);

// Input validation for algorithm runs (robot count and grid dimensions).
void validate_run_input(const Configuration& c, Mode mode);

}  // namespace gmv
