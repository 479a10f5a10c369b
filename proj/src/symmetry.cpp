#include "gmv/symmetry.hpp"

#include <algorithm>
#include <limits>

namespace gmv {

int center_type(const Center& c) {
  const bool row_even = (c.row2 % 2) == 0;
  const bool col_even = (c.col2 % 2) == 0;
  if (row_even && col_even) return 1;
  if (row_even != col_even) return 2;
  return 3;
}

Center rect_center(const Rect& r) { return Center{r.top + r.bottom, r.left + r.right}; }

Center grid_center(const GridSpec& g) {
  if (!g.finite) throw DomainError("grid_center requires a finite grid");
  return Center{1 + g.rows, 1 + g.cols};
}

Cell rotate_cell(const Cell& c, const Center& ctr, int quarter_turns) {
  int dr = 2 * c.row - ctr.row2;
  int dc = 2 * c.col - ctr.col2;
  quarter_turns = ((quarter_turns % 4) + 4) % 4;
  for (int i = 0; i < quarter_turns; ++i) {
    int ndr = dc;
    int ndc = -dr;
    dr = ndr;
    dc = ndc;
  }
  int r2 = ctr.row2 + dr;
  int c2 = ctr.col2 + dc;
  if ((r2 % 2) != 0 || (c2 % 2) != 0)
    throw InternalError("rotation does not map cells to cells");
  return Cell{r2 / 2, c2 / 2};
}

namespace {

bool maps_to_itself(const std::vector<Cell>& sorted, const Center& ctr, int quarter_turns) {
  // A 90-degree turn maps cells to cells only if both center parities agree.
  if (quarter_turns % 2 != 0 && (ctr.row2 % 2) != (ctr.col2 % 2)) return false;
  std::vector<Cell> rotated;
  rotated.reserve(sorted.size());
  for (const Cell& c : sorted) rotated.push_back(rotate_cell(c, ctr, quarter_turns));
  std::sort(rotated.begin(), rotated.end());
  return rotated == sorted;
}

}  // namespace

SymmetryInfo rotation_group(const Configuration& c) {
  if (c.robots.empty()) throw DomainError("rotation_group of an empty configuration");
  SymmetryInfo info;
  info.center = rect_center(mbr(c));

  if (maps_to_itself(c.robots, info.center, 1)) info.set_order = 4;
  else if (maps_to_itself(c.robots, info.center, 2)) info.set_order = 2;
  else info.set_order = 1;

  if (!c.grid.finite) {
    info.grid_order = info.set_order;
  } else {
    const Center gc = grid_center(c.grid);
    if (info.center == gc && info.set_order == 4 && c.grid.rows == c.grid.cols)
      info.grid_order = 4;
    else if (info.center == gc && info.set_order >= 2)
      info.grid_order = 2;
    else
      info.grid_order = 1;
  }

  info.rho = info.grid_order;
  if (info.grid_order > 1) {
    info.tc = center_type(info.center);
    if (info.tc == 1) {
      Cell ctr{info.center.row2 / 2, info.center.col2 / 2};
      if (c.occupied(ctr)) info.rho = 1;
    }
  }
  return info;
}

std::vector<Cell> corner_scan_cells(const Rect& r, int corner) {
  std::vector<Cell> out;
  out.reserve(static_cast<size_t>(r.area()));
  switch (corner) {
    case kCornerTL:
      for (int i = r.top; i <= r.bottom; ++i)
        for (int j = r.left; j <= r.right; ++j) out.push_back({i, j});
      break;
    case kCornerTR:
      for (int j = r.right; j >= r.left; --j)
        for (int i = r.top; i <= r.bottom; ++i) out.push_back({i, j});
      break;
    case kCornerBR:
      for (int i = r.bottom; i >= r.top; --i)
        for (int j = r.right; j >= r.left; --j) out.push_back({i, j});
      break;
    case kCornerBL:
      for (int j = r.left; j <= r.right; ++j)
        for (int i = r.bottom; i >= r.top; --i) out.push_back({i, j});
      break;
    default:
      throw DomainError("corner id must be 0..3");
  }
  return out;
}

std::vector<int> admissible_corners(const Rect& r) {
  if (r.height() == r.width()) return {kCornerTL, kCornerTR, kCornerBR, kCornerBL};
  // Scan lines must run along the longer dimension; the start corners then
  // lie on the two shorter sides, one from each.
  if (r.width() > r.height()) return {kCornerTL, kCornerBR};
  return {kCornerTR, kCornerBL};
}

namespace {

LssResult lss_of_rect(const std::vector<Cell>& robots, const Rect& box,
                      const std::vector<int>& corners) {
  LssResult res;
  for (int corner : corners) {
    std::string s;
    s.reserve(static_cast<size_t>(box.area()));
    for (const Cell& cell : corner_scan_cells(box, corner))
      s.push_back(std::binary_search(robots.begin(), robots.end(), cell) ? '1' : '0');
    res.candidates.push_back({corner, std::move(s)});
  }
  res.lss = res.candidates[0].bits;
  for (const auto& cand : res.candidates)
    if (cand.bits < res.lss) res.lss = cand.bits;
  return res;
}

std::map<Cell, int> rank_from_scans(const Rect& box, const LssResult& scans) {
  std::map<Cell, int> rank;
  for (const auto& cand : scans.candidates) {
    if (cand.bits != scans.lss) continue;
    int idx = 0;
    int pos = 0;
    for (const Cell& cell : corner_scan_cells(box, cand.corner)) {
      if (cand.bits[pos++] == '1') {
        auto it = rank.find(cell);
        if (it == rank.end() || idx < it->second) rank[cell] = idx;
        ++idx;
      }
    }
  }
  return rank;
}

}  // namespace

LssResult lss(const Configuration& c) {
  if (c.robots.empty()) throw DomainError("lss of an empty configuration");
  Rect box = mbr(c);
  return lss_of_rect(c.robots, box, admissible_corners(box));
}

std::map<Cell, int> view_rank(const Configuration& c) {
  if (c.robots.empty()) throw DomainError("view_rank of an empty configuration");
  Rect box = mbr(c);
  LssResult scans = lss_of_rect(c.robots, box, admissible_corners(box));
  return rank_from_scans(box, scans);
}

std::map<Cell, int> grid_view_rank(const Configuration& c) {
  if (!c.grid.finite) throw DomainError("grid_view_rank requires a finite grid");
  Rect box{1, 1, c.grid.rows, c.grid.cols};
  LssResult scans = lss_of_rect(c.robots, box, admissible_corners(box));
  return rank_from_scans(box, scans);
}

}  // namespace gmv
