#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gmv/grid.hpp"

namespace gmv {

// Target placement achieving GMV within a minimum-area box. Cells are local
// 1-based coordinates inside a box_rows x box_cols box whose mbr is tight.
struct Pattern {
  int n = 0;
  int rho_f = 1;
  int tc_f = 0;  // 0 for asymmetric patterns
  int box_rows = 0;
  int box_cols = 0;
  std::vector<Cell> cells;  // sorted
  int max_view_corner = 1;  // local corner id anchoring asymmetric embeddings
  // Per local box corner (TL,TR,BR,BL): the guard's final target adjacent to
  // that corner along the corner's first row, when the pattern supports a
  // guard there.
  std::array<std::optional<Cell>, 4> guard_target;

  bool contains(const Cell& c) const;
};

// Asymmetric target pattern: two robots per row (last row one when n is
// odd), at most two per column, all four box corners empty, guard target
// next to the top-right corner. Deterministic; memoized.
const Pattern& asym_pattern(int n);

// Rotationally symmetric pattern, invariant under 360/rho degree rotation
// about its box center, with tc_f == tc. Throws DomainError on
// unrealizable (n, rho, tc) combinations.
const Pattern& sym_pattern(int n, int rho, int tc);

// Rigid placement of the pattern with its top-right corner on the given
// grid corner (0=TL,1=TR,2=BR,3=BL). Returns targets in grid coordinates.
std::vector<Cell> embed_at_corner(const Pattern& p, const GridSpec& g, int corner);
Cell guard_target_at_corner(const Pattern& p, const GridSpec& g, int corner);

// Centered placement for symmetric patterns: pattern center on the grid
// center, rotated by `quarter_turns` cw. Throws if the box does not fit or
// the parities disagree.
std::vector<Cell> embed_centered(const Pattern& p, const GridSpec& g, int quarter_turns);
// Guard target of the rotated pattern at the given local corner of the
// embedded box, in grid coordinates.
std::optional<Cell> centered_guard_target(const Pattern& p, const GridSpec& g,
                                          int quarter_turns, int corner);

// Human-diffable cache of generated patterns.
void load_pattern_cache(const std::string& path);
void save_pattern_cache(const std::string& path);

}  // namespace gmv
