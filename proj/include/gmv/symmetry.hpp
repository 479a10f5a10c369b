#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmv/grid.hpp"

namespace gmv {

// Rotation center in doubled coordinates: cell (i,j) sits at (2i,2j), so
// edge midpoints and tile centers are integral too.
struct Center {
  int row2 = 0;
  int col2 = 0;
  bool operator==(const Center&) const = default;
};

// 1 = vertex, 2 = edge midpoint, 3 = tile center.
int center_type(const Center& c);

Center rect_center(const Rect& r);
Center grid_center(const GridSpec& g);

// Rotate a cell by k*90 degrees clockwise about a doubled-coordinate center.
Cell rotate_cell(const Cell& c, const Center& ctr, int quarter_turns);

struct SymmetryInfo {
  // Rotational order of the robot set about its mbr center.
  int set_order = 1;
  // Order of the configuration including the grid (rotations must map the
  // grid onto itself); equals set_order on infinite grids.
  int grid_order = 1;
  Center center;  // mbr center; the only candidate rotation center
  int rho = 1;    // grid_order demoted to 1 when a robot sits on a vertex center
  int tc = 0;     // center type, 0 when grid_order == 1
};

SymmetryInfo rotation_group(const Configuration& c);

// Corner ids for scan strings and frames: 0=TL, 1=TR, 2=BR, 3=BL.
inline constexpr int kCornerTL = 0;
inline constexpr int kCornerTR = 1;
inline constexpr int kCornerBR = 2;
inline constexpr int kCornerBL = 3;

// Cells of the rect in the raster order of the given corner's frame: the
// first line is the side leaving the corner clockwise, scanned away from
// the corner; successive lines proceed inward in the same direction.
std::vector<Cell> corner_scan_cells(const Rect& r, int corner);

// Corners whose scan lines run along the longer rect dimension (all four
// for squares, two opposite ones for proper rectangles).
std::vector<int> admissible_corners(const Rect& r);

struct LssResult {
  std::string lss;
  struct Candidate {
    int corner = 0;
    std::string bits;
  };
  std::vector<Candidate> candidates;
};

LssResult lss(const Configuration& c);

// Rank of each robot inside the winning LSS scan: 0 for the robot met
// first, counting occupied positions only. Robots equivalent under a
// nontrivial rotation of the set share ranks.
std::map<Cell, int> view_rank(const Configuration& c);

// Strict tie-break for finite grids: ranks from the best scan of the whole
// grid rectangle. A strict total order whenever the configuration-on-grid
// is asymmetric, which pure mbr scans cannot guarantee.
std::map<Cell, int> grid_view_rank(const Configuration& c);

}  // namespace gmv
