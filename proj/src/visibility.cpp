#include "gmv/visibility.hpp"

#include <algorithm>
#include <vector>

namespace gmv {

bool geodesic_visible(const Configuration& c, const Cell& u, const Cell& v) {
  if (!c.occupied(u) || !c.occupied(v))
    throw DomainError("geodesic_visible: endpoints must be robots");
  if (u == v) throw DomainError("geodesic_visible: endpoints must differ");

  const int dr = v.row >= u.row ? 1 : -1;
  const int dc = v.col >= u.col ? 1 : -1;
  const int nr = std::abs(v.row - u.row) + 1;
  const int nc = std::abs(v.col - u.col) + 1;

  // reach[i][j]: some monotone prefix path from u reaches this vertex with
  // all interior vertices (everything but u and v) unoccupied.
  std::vector<char> reach(static_cast<size_t>(nr) * nc, 0);
  auto at = [&](int i, int j) -> char& { return reach[static_cast<size_t>(i) * nc + j]; };
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) {
      if (i == 0 && j == 0) {
        at(0, 0) = 1;
        continue;
      }
      Cell cell{u.row + i * dr, u.col + j * dc};
      if (cell != v && c.occupied(cell)) continue;
      bool from_prev = (i > 0 && at(i - 1, j)) || (j > 0 && at(i, j - 1));
      at(i, j) = from_prev ? 1 : 0;
    }
  }
  return at(nr - 1, nc - 1) != 0;
}

GmvReport is_gmv(const Configuration& c) {
  GmvReport rep;
  if (c.robots.size() < 2) {
    rep.holds = true;
    rep.degenerate = true;
    rep.area = c.robots.empty() ? 0 : 1;
    return rep;
  }
  rep.area = mbr(c).area();
  for (size_t i = 0; i < c.robots.size(); ++i) {
    for (size_t j = i + 1; j < c.robots.size(); ++j) {
      if (!geodesic_visible(c, c.robots[i], c.robots[j])) {
        rep.holds = false;
        rep.first_violating_pair = {c.robots[i], c.robots[j]};
        return rep;
      }
    }
  }
  rep.holds = true;
  return rep;
}

int mu_grid(int rows, int cols) {
  if (rows <= 3 || cols <= 3)
    throw DomainError("mu_grid is only defined for grids with more than 3 rows and columns");
  return 2 * std::min(rows, cols);
}

long long min_area(int n) {
  long long k = (n + 1) / 2;
  return k * k;
}

bool certify_min_area(const Configuration& c) {
  GmvReport rep = is_gmv(c);
  if (!rep.holds || rep.degenerate)
    throw DomainError("certify_min_area requires a configuration in geodesic mutual visibility");
  return rep.area == min_area(c.size());
}

}  // namespace gmv
