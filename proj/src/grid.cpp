#include "gmv/grid.hpp"

#include <algorithm>
#include <cstdlib>

namespace gmv {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

GridSpec GridSpec::make_finite(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("grid dimensions must be positive");
  GridSpec g;
  g.finite = true;
  g.rows = rows;
  g.cols = cols;
  return g;
}

GridSpec GridSpec::make_infinite() {
  GridSpec g;
  g.finite = false;
  return g;
}

bool GridSpec::contains(const Cell& c) const {
  if (!finite) return true;
  return c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols;
}

bool GridSpec::on_side(const Cell& c) const {
  if (!finite) throw DomainError("perimeter is undefined on infinite grids");
  return c.row == 1 || c.row == rows || c.col == 1 || c.col == cols;
}

bool GridSpec::on_corner(const Cell& c) const {
  if (!finite) throw DomainError("corners are undefined on infinite grids");
  return (c.row == 1 || c.row == rows) && (c.col == 1 || c.col == cols);
}

std::vector<Cell> GridSpec::corners() const {
  if (!finite) throw DomainError("corners are undefined on infinite grids");
  return {{1, 1}, {1, cols}, {rows, cols}, {rows, 1}};
}

Configuration Configuration::make(GridSpec grid, std::vector<Cell> robots) {
  std::sort(robots.begin(), robots.end());
  if (std::adjacent_find(robots.begin(), robots.end()) != robots.end())
    throw DomainError("robots must occupy distinct cells");
  for (const Cell& c : robots)
    if (!grid.contains(c)) throw DomainError("robot " + to_string(c) + " outside the grid");
  Configuration cfg;
  cfg.grid = grid;
  cfg.robots = std::move(robots);
  return cfg;
}

bool Configuration::occupied(const Cell& c) const {
  return std::binary_search(robots.begin(), robots.end(), c);
}

int manhattan(const Cell& u, const Cell& v) {
  return std::abs(u.row - v.row) + std::abs(u.col - v.col);
}

int manhattan_to_rect(const Cell& u, const Rect& r) {
  int dr = 0;
  if (u.row < r.top) dr = r.top - u.row;
  else if (u.row > r.bottom) dr = u.row - r.bottom;
  int dc = 0;
  if (u.col < r.left) dc = r.left - u.col;
  else if (u.col > r.right) dc = u.col - r.right;
  return dr + dc;
}

int total_distance(const Configuration& c, const Cell& r) {
  if (!c.occupied(r)) throw DomainError("total_distance: " + to_string(r) + " is not a robot");
  int sum = 0;
  for (const Cell& x : c.robots) sum += manhattan(r, x);
  return sum;
}

Rect mbr(std::span<const Cell> cells) {
  if (cells.empty()) throw DomainError("mbr of an empty set");
  Rect r{cells[0].row, cells[0].col, cells[0].row, cells[0].col};
  for (const Cell& c : cells) {
    r.top = std::min(r.top, c.row);
    r.bottom = std::max(r.bottom, c.row);
    r.left = std::min(r.left, c.col);
    r.right = std::max(r.right, c.col);
  }
  return r;
}

Rect mbr(const Configuration& c) { return mbr(std::span<const Cell>(c.robots)); }

PerimeterStats perimeter_stats(const Configuration& c) {
  if (!c.grid.finite)
    throw DomainError("perimeter_stats requires a finite grid");
  PerimeterStats s;
  for (const Cell& r : c.robots) {
    if (c.grid.on_side(r)) ++s.on_sides;
    if (c.grid.on_corner(r)) ++s.on_corners;
  }
  return s;
}

Cell Frame::to_canonical(const Cell& c) const {
  const int M = grid_rows, N = grid_cols;
  switch (rot) {
    case 0: return c;
    case 1: return {c.col, M + 1 - c.row};
    case 2: return {M + 1 - c.row, N + 1 - c.col};
    case 3: return {N + 1 - c.col, c.row};
  }
  throw InternalError("bad frame rotation");
}

Cell Frame::to_global(const Cell& c) const {
  const int M = grid_rows, N = grid_cols;
  switch (rot) {
    case 0: return c;
    case 1: return {M + 1 - c.col, c.row};
    case 2: return {M + 1 - c.row, N + 1 - c.col};
    case 3: return {c.col, N + 1 - c.row};
  }
  throw InternalError("bad frame rotation");
}

Frame Frame::for_corner(const GridSpec& g, int corner) {
  if (!g.finite) throw DomainError("frames require a finite grid");
  Frame f;
  f.grid_rows = g.rows;
  f.grid_cols = g.cols;
  switch (corner) {
    case 0: f.rot = 1; break;  // TL
    case 1: f.rot = 0; break;  // TR
    case 2: f.rot = 3; break;  // BR
    case 3: f.rot = 2; break;  // BL
  }
  return f;
}

}  // namespace gmv
