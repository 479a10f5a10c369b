#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmv {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Grid vertex. Finite grids are 1-based with row 1 at the top; infinite
// grids use unbounded signed coordinates.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& c);

struct GridSpec {
  bool finite = true;
  int rows = 0;  // valid when finite
  int cols = 0;

  static GridSpec make_finite(int rows, int cols);
  static GridSpec make_infinite();

  bool contains(const Cell& c) const;
  bool on_side(const Cell& c) const;    // finite only
  bool on_corner(const Cell& c) const;  // finite only
  std::vector<Cell> corners() const;    // TL, TR, BR, BL

  bool operator==(const GridSpec&) const = default;
};

// A set of robots on a grid. Robots are kept sorted row-major and distinct.
struct Configuration {
  GridSpec grid;
  std::vector<Cell> robots;

  static Configuration make(GridSpec grid, std::vector<Cell> robots);

  int size() const { return static_cast<int>(robots.size()); }
  bool occupied(const Cell& c) const;
};

// Axis-parallel rectangle in cell coordinates, inclusive bounds.
struct Rect {
  int top = 0;
  int left = 0;
  int bottom = 0;
  int right = 0;

  int height() const { return bottom - top + 1; }
  int width() const { return right - left + 1; }
  long long area() const { return 1LL * height() * width(); }
  bool contains(const Cell& c) const {
    return c.row >= top && c.row <= bottom && c.col >= left && c.col <= right;
  }
  bool operator==(const Rect&) const = default;
};

int manhattan(const Cell& u, const Cell& v);

// d(r, rect) = 0 when inside; otherwise shortest grid distance to the rect.
int manhattan_to_rect(const Cell& u, const Rect& r);

// D(r): sum of distances from r to every robot of the configuration.
int total_distance(const Configuration& c, const Cell& r);

Rect mbr(std::span<const Cell> cells);
Rect mbr(const Configuration& c);

struct PerimeterStats {
  int on_sides = 0;    // robots on boundary rows/columns (corners included)
  int on_corners = 0;  // robots on the four grid corners
};

PerimeterStats perimeter_stats(const Configuration& c);

// Index-relabeling of a finite grid that sends a chosen grid corner to the
// top-right cell of the canonical view. Pure rotation, so chirality (the
// shared clockwise sense) is preserved.
struct Frame {
  int rot = 0;  // cw quarter-turns applied to the grid
  int grid_rows = 0;
  int grid_cols = 0;

  int rows() const { return rot % 2 == 0 ? grid_rows : grid_cols; }
  int cols() const { return rot % 2 == 0 ? grid_cols : grid_rows; }
  Cell to_canonical(const Cell& c) const;
  Cell to_global(const Cell& c) const;

  // corner: 0=TL, 1=TR, 2=BR, 3=BL in global coordinates.
  static Frame for_corner(const GridSpec& g, int corner);
};

}  // namespace gmv
