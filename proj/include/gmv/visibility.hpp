#pragma once

#include <optional>
#include <utility>

#include "gmv/grid.hpp"

namespace gmv {

struct GmvReport {
  bool holds = false;
  bool degenerate = false;  // fewer than 2 robots: vacuously true
  std::optional<std::pair<Cell, Cell>> first_violating_pair;
  long long area = 0;  // mbr area in cells
  std::optional<bool> min_area_certified;
};

// True iff some monotone lattice path of length manhattan(u,v) from u to v
// has no robot on its interior vertices. O(spanned rectangle area).
bool geodesic_visible(const Configuration& c, const Cell& u, const Cell& v);

GmvReport is_gmv(const Configuration& c);

// Maximum number of mutually visible robots on a finite grid, 2*min{M,N};
// only claimed for M,N > 3.
int mu_grid(int rows, int cols);

// Smallest achievable mbr area for n robots in geodesic mutual visibility:
// a ceil(n/2) x ceil(n/2) box.
long long min_area(int n);

// True iff the configuration's mbr area equals min_area(n).
// Requires is_gmv(c) to hold.
bool certify_min_area(const Configuration& c);

}  // namespace gmv
