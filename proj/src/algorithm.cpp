#include "gmv/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include "gmv/symmetry.hpp"
#include "gmv/visibility.hpp"

namespace gmv {

const char* to_string(TaskId t) {
  switch (t) {
    case TaskId::T1a: return "T1a";
    case TaskId::T1b: return "T1b";
    case TaskId::T1c: return "T1c";
    case TaskId::T2: return "T2";
    case TaskId::T3: return "T3";
    case TaskId::T4: return "T4";
    case TaskId::T5: return "T5";
  }
  return "?";
}

namespace {

int monus(int a, int b) { return a > b ? a - b : 0; }

MovePlan plan_from_dest(TaskId task, const std::map<Cell, Cell>& dest) {
  MovePlan plan;
  plan.task = task;
  for (const auto& [src, dst] : dest)
    if (src != dst) plan.moves.emplace_back(src, dst);
  return plan;
}

// Minimum-view comparison: mbr-scan rank first, whole-grid scan rank as the
// tie-break (strict whenever the configuration-on-grid is asymmetric, which
// mbr scans alone cannot guarantee), coordinates as a final resort.
struct ViewOrder {
  std::map<Cell, int> vr;
  std::map<Cell, int> gvr;

  explicit ViewOrder(const Configuration& c) : vr(view_rank(c)) {
    if (c.grid.finite) gvr = grid_view_rank(c);
  }
  std::array<int, 4> key(const Cell& r) const {
    auto g = gvr.find(r);
    return {vr.at(r), g == gvr.end() ? 0 : g->second, r.row, r.col};
  }
  bool less(const Cell& a, const Cell& b) const { return key(a) < key(b); }
};

}  // namespace

std::array<SpecialPath, 4> special_paths(const Rect& rect) {
  if (rect.height() < 4 || rect.width() < 4)
    throw DomainError("special paths require a rect of at least 4x4");
  std::array<SpecialPath, 4> out;
  // Quarter-turns sending each corner to the top-left of the rotated view:
  // the path then runs clockwise, row by row, per the trait rule.
  const std::array<int, 4> rot_for{0, 3, 2, 1};  // TL, TR, BR, BL
  for (int corner = 0; corner < 4; ++corner) {
    Frame f;
    f.rot = rot_for[corner];
    f.grid_rows = rect.height();
    f.grid_cols = rect.width();
    const int rows = f.rows(), cols = f.cols();
    const int traits = std::min(rows, cols) / 2;
    SpecialPath p;
    for (int t = 1; t <= traits; ++t) {
      if (t % 2 == 1)
        for (int j = t; j <= cols - t; ++j) p.vertices.push_back({t, j});
      else
        for (int j = cols - t + 1; j >= t + 1; --j) p.vertices.push_back({t, j});
    }
    for (Cell& v : p.vertices) {
      v = f.to_global(v);
      v = {v.row + rect.top - 1, v.col + rect.left - 1};
    }
    p.corner = p.vertices.front();
    out[corner] = std::move(p);
  }
  return out;
}

std::vector<RowAccount> row_accounts(const std::vector<int>& robots_per_row,
                                     const std::vector<int>& targets_per_row) {
  if (robots_per_row.size() != targets_per_row.size())
    throw DomainError("row_accounts: row vectors must have equal length");
  const int m = static_cast<int>(robots_per_row.size()) - 1;
  std::vector<RowAccount> acc(m + 1);
  int above_r = 0, above_t = 0;
  int total_r = 0, total_t = 0;
  for (int l = 1; l <= m; ++l) {
    total_r += robots_per_row[l];
    total_t += targets_per_row[l];
  }
  for (int l = 1; l <= m; ++l) {
    RowAccount& a = acc[l];
    a.robots = robots_per_row[l];
    a.targets = targets_per_row[l];
    a.robots_above = above_r;
    a.targets_above = above_t;
    a.robots_below = total_r - above_r - a.robots;
    a.targets_below = total_t - above_t - a.targets;
    a.excess_above = monus(a.robots_above + a.robots, a.targets_above + a.targets);
    a.excess_below = monus(a.robots_below + a.robots, a.targets_below + a.targets);
    a.move_down = a.robots - monus(a.robots, a.excess_above);
    a.move_up = a.robots - monus(a.robots, a.excess_below);
    above_r += a.robots;
    above_t += a.targets;
  }
  return acc;
}

namespace {

struct RowData {
  std::vector<int> robots_per_row;
  std::vector<int> targets_per_row;
  std::vector<std::vector<Cell>> row_robots;   // sorted by column
  std::vector<std::vector<Cell>> row_targets;  // sorted by column
};

RowData rows_of(const T2Board& b) {
  RowData d;
  d.robots_per_row.assign(b.rows + 1, 0);
  d.targets_per_row.assign(b.rows + 1, 0);
  d.row_robots.assign(b.rows + 1, {});
  d.row_targets.assign(b.rows + 1, {});
  for (const Cell& r : b.robots) {
    if (r.row < 1 || r.row > b.rows) throw InternalError("robot outside the board rows");
    ++d.robots_per_row[r.row];
    d.row_robots[r.row].push_back(r);
  }
  for (const Cell& t : b.targets) {
    if (t.row < 1 || t.row > b.rows) throw InternalError("target outside the board rows");
    ++d.targets_per_row[t.row];
    d.row_targets[t.row].push_back(t);
  }
  for (int l = 1; l <= b.rows; ++l) {
    auto by_col = [](const Cell& a, const Cell& c) { return a.col < c.col; };
    std::sort(d.row_robots[l].begin(), d.row_robots[l].end(), by_col);
    std::sort(d.row_targets[l].begin(), d.row_targets[l].end(), by_col);
  }
  return d;
}

}  // namespace

bool t2_balanced(const T2Board& b) {
  RowData d = rows_of(b);
  auto acc = row_accounts(d.robots_per_row, d.targets_per_row);
  for (int l = 1; l <= b.rows; ++l)
    if (acc[l].excess_above != 0 || acc[l].excess_below != 0) return false;
  return true;
}

T2Outcome t2_compute(const T2Board& b) {
  RowData d = rows_of(b);
  auto acc = row_accounts(d.robots_per_row, d.targets_per_row);

  T2Outcome out;
  out.up.assign(b.rows + 1, {});
  out.down.assign(b.rows + 1, {});

  for (int l = 1; l <= b.rows; ++l) {
    std::vector<Cell> cand;
    for (const Cell& r : d.row_robots[l]) {
      if (b.protection && (r.col == b.col_lo || r.col == b.col_hi)) continue;
      cand.push_back(r);
    }
    // Nobody is selected into the forbidden cell; the next candidate moves
    // instead, so the row still makes progress.
    std::vector<Cell> down_ok, up_ok;
    for (const Cell& r : cand)
      if (!b.forbidden || Cell{l + 1, r.col} != *b.forbidden) down_ok.push_back(r);
    const int nd = std::min<int>(acc[l].move_down, static_cast<int>(down_ok.size()));
    for (int i = 0; i < nd; ++i) out.down[l].push_back(down_ok[i]);
    for (const Cell& r : cand) {
      if (std::find(out.down[l].begin(), out.down[l].end(), r) != out.down[l].end()) continue;
      if (b.forbidden && Cell{l - 1, r.col} == *b.forbidden) continue;
      up_ok.push_back(r);
    }
    const int nu = std::max(0, std::min<int>(acc[l].move_up, static_cast<int>(up_ok.size())));
    for (int i = 0; i < nu; ++i) out.up[l].push_back(up_ok[up_ok.size() - 1 - i]);
    std::sort(out.up[l].begin(), out.up[l].end());
  }

  // A lone robot at (2, col 1) selected upward would land on a corner.
  if (b.corner_rules && b.rows >= 2 && out.up[2].size() == 1 &&
      out.up[2][0] == Cell{2, b.col_lo})
    out.up[2].clear();

  auto in_set = [](const std::vector<Cell>& v, const Cell& c) {
    return std::find(v.begin(), v.end(), c) != v.end();
  };

  std::vector<Cell> everyone = b.robots;
  if (b.guard) everyone.push_back(*b.guard);

  const bool case5_active = b.corner_rules && b.rows >= 2 && acc[2].move_up == 1 &&
                            d.row_robots[2].size() == 1 &&
                            d.row_robots[2][0] == Cell{2, b.col_lo};

  for (const Cell& r : everyone) {
    const int l = r.row;
    Cell dst = r;
    const bool is_guard = b.guard && r == *b.guard;
    if (!is_guard && in_set(out.down[l], r)) {
      dst = {l + 1, r.col};
    } else if (!is_guard && in_set(out.up[l], r)) {
      dst = {l - 1, r.col};
    } else {
      const bool aligned_up =
          l + 1 <= b.rows && out.up[l + 1].size() == 1 && out.up[l + 1][0].col == r.col;
      const bool aligned_down =
          l - 1 >= 1 && out.down[l - 1].size() == 1 && out.down[l - 1][0].col == r.col;
      if (aligned_up || aligned_down) {
        dst = r.col > b.side_center ? Cell{l, r.col - 1} : Cell{l, r.col + 1};
      } else if (case5_active && r == Cell{2, b.col_lo}) {
        dst = {2, b.col_lo + 1};
      }
    }
    if (b.forbidden && dst == *b.forbidden) dst = r;
    out.dest[r] = dst;
  }

  // Upward movers yield for a cycle when any other robot shares their
  // destination; side and downward movements always proceed.
  std::map<Cell, int> hits;
  for (const auto& [src, dst] : out.dest) ++hits[dst];
  for (const Cell& r : b.robots) {
    if (!in_set(out.up[r.row], r)) continue;
    const Cell dst = out.dest[r];
    if (dst != r && hits[dst] > 1) out.dest[r] = r;
  }
  return out;
}

std::map<Cell, Cell> t3_compute(const T2Board& b) {
  RowData d = rows_of(b);
  std::map<Cell, Cell> dest;
  for (int l = 1; l <= b.rows; ++l) {
    const auto& rr = d.row_robots[l];
    const auto& tt = d.row_targets[l];
    if (rr.size() != tt.size())
      throw InternalError("t3 requires per-row robot and target counts to match");
    for (size_t i = 0; i < rr.size(); ++i) {
      const Cell r = rr[i];
      const Cell t = tt[i];
      Cell dst = r;
      if (r.col < t.col) dst = {l, r.col + 1};
      else if (r.col > t.col) dst = {l, r.col - 1};
      dest[r] = dst;
    }
  }
  if (b.guard) dest[*b.guard] = *b.guard;
  return dest;
}

// ---------------------------------------------------------------------------
// Asymmetric finite-grid pipeline
// ---------------------------------------------------------------------------

namespace {

struct AsymCtx {
  Frame frame;
  Cell guard_global;
  const Pattern* pat = nullptr;
  T2Board board;      // canonical coordinates, guard at (1, cols)
  Cell guard_target;  // canonical
};

std::vector<Cell> occupied_grid_corners(const Configuration& c) {
  std::vector<Cell> out;
  for (const Cell& k : c.grid.corners())
    if (c.occupied(k)) out.push_back(k);
  return out;
}

int corner_id_of(const GridSpec& g, const Cell& c) {
  auto ks = g.corners();
  for (int i = 0; i < 4; ++i)
    if (ks[i] == c) return i;
  throw InternalError("not a grid corner");
}

AsymCtx make_asym_ctx(const Configuration& c) {
  auto corners = occupied_grid_corners(c);
  if (corners.size() != 1)
    throw InternalError("asym context requires exactly one corner robot");
  AsymCtx ctx;
  ctx.guard_global = corners.front();
  ctx.frame = Frame::for_corner(c.grid, corner_id_of(c.grid, ctx.guard_global));
  ctx.pat = &asym_pattern(c.size());

  const int rows = ctx.frame.rows();
  const int cols = ctx.frame.cols();
  const int shift = cols - ctx.pat->box_cols;
  ctx.guard_target = {1, cols - 1};

  ctx.board.rows = rows;
  ctx.board.col_lo = 1;
  ctx.board.col_hi = cols;
  ctx.board.protection = (rows == ctx.pat->box_rows);
  ctx.board.corner_rules = true;
  ctx.board.side_center = cols / 2.0;
  ctx.board.guard = Cell{1, cols};
  for (const Cell& r : c.robots)
    if (r != ctx.guard_global) ctx.board.robots.push_back(ctx.frame.to_canonical(r));
  std::sort(ctx.board.robots.begin(), ctx.board.robots.end());
  for (const Cell& t : ctx.pat->cells) {
    Cell canon{t.row, t.col + shift};
    if (canon == ctx.guard_target) continue;
    ctx.board.targets.push_back(canon);
  }
  std::sort(ctx.board.targets.begin(), ctx.board.targets.end());
  return ctx;
}

bool asym_formed(const Configuration& c) {
  const Pattern& p = asym_pattern(c.size());
  if (p.box_rows > c.grid.rows || p.box_cols > c.grid.cols) return false;
  for (int corner = 0; corner < 4; ++corner)
    if (embed_at_corner(p, c.grid, corner) == c.robots) return true;
  return false;
}

TaskId classify_asym(const Configuration& c) {
  if (asym_formed(c)) return TaskId::T5;
  PerimeterStats ps = perimeter_stats(c);
  if (ps.on_corners == 1) {
    AsymCtx ctx = make_asym_ctx(c);
    if (ctx.board.robots == ctx.board.targets) return TaskId::T4;
    return t2_balanced(ctx.board) ? TaskId::T3 : TaskId::T2;
  }
  if (ps.on_corners > 1) return TaskId::T1c;
  if (ps.on_sides >= 1) return TaskId::T1b;
  return TaskId::T1a;
}

bool has_free_neighbor(const Configuration& c, const Cell& r) {
  for (const Cell& d : {Cell{r.row - 1, r.col}, Cell{r.row, r.col + 1},
                        Cell{r.row + 1, r.col}, Cell{r.row, r.col - 1}})
    if (c.grid.contains(d) && !c.occupied(d)) return true;
  return false;
}

Cell elect_max_distance(const Configuration& c, bool movable_only) {
  ViewOrder view(c);
  std::optional<Cell> best;
  int best_d = -1;
  for (const Cell& r : c.robots) {
    if (movable_only && !has_free_neighbor(c, r)) continue;
    int dr = total_distance(c, r);
    if (dr > best_d || (dr == best_d && view.less(r, *best))) {
      best = r;
      best_d = dr;
    }
  }
  if (!best) throw InternalError("no electable robot");
  return *best;
}

MovePlan t1a_plan(const Configuration& c) {
  Cell g = elect_max_distance(c, false);
  // The maximum-distance robot can be walled in; the tie set always holds a
  // robot with an escape, which then inherits the election.
  if (!has_free_neighbor(c, g)) g = elect_max_distance(c, true);
  const int M = c.grid.rows, N = c.grid.cols;
  struct Option {
    int dist;
    int pref;  // clockwise preference starting from the top side
    Cell step;
  };
  std::array<Option, 4> opts = {
      Option{g.row - 1, 0, {g.row - 1, g.col}},
      Option{N - g.col, 1, {g.row, g.col + 1}},
      Option{M - g.row, 2, {g.row + 1, g.col}},
      Option{g.col - 1, 3, {g.row, g.col - 1}},
  };
  std::sort(opts.begin(), opts.end(), [](const Option& a, const Option& b) {
    return std::tie(a.dist, a.pref) < std::tie(b.dist, b.pref);
  });
  for (const Option& o : opts) {
    if (!c.grid.contains(o.step) || c.occupied(o.step)) continue;
    MovePlan plan;
    plan.task = TaskId::T1a;
    plan.moves.emplace_back(g, o.step);
    return plan;
  }
  throw InternalError("t1a mover has no free step");
}

int nearest_corner_distance(const GridSpec& g, const Cell& r) {
  int best = std::numeric_limits<int>::max();
  for (const Cell& k : g.corners()) best = std::min(best, manhattan(r, k));
  return best;
}

// Corner preference on ties: clockwise starting from the top-right.
constexpr std::array<int, 4> kCornerPreference = {kCornerTR, kCornerBR, kCornerBL, kCornerTL};

MovePlan t1b_plan(const Configuration& c) {
  ViewOrder view(c);
  std::optional<Cell> best;
  int best_d = std::numeric_limits<int>::max();
  for (const Cell& r : c.robots) {
    if (!c.grid.on_side(r)) continue;
    int d = nearest_corner_distance(c.grid, r);
    if (d < best_d || (d == best_d && view.less(r, *best))) {
      best = r;
      best_d = d;
    }
  }
  if (!best) throw InternalError("t1b requires a side robot");
  const Cell g = *best;
  auto corners = c.grid.corners();
  std::optional<Cell> target;
  for (int pref : kCornerPreference) {
    if (manhattan(g, corners[pref]) == best_d) {
      target = corners[pref];
      break;
    }
  }
  Cell step = g;
  if (g.row == target->row) step.col += target->col > g.col ? 1 : -1;
  else if (g.col == target->col) step.row += target->row > g.row ? 1 : -1;
  else throw InternalError("t1b mover does not share a side with its corner");
  MovePlan plan;
  plan.task = TaskId::T1b;
  plan.moves.emplace_back(g, step);
  return plan;
}

struct PathState {
  const SpecialPath* path = nullptr;
  bool occupied = false;     // corner robot present
  bool full = false;         // every vertex occupied
  std::vector<Cell> prefix;  // maximal fully occupied prefix from the corner
};

std::vector<PathState> path_states(const Configuration& c,
                                   const std::array<SpecialPath, 4>& paths) {
  std::vector<PathState> st(4);
  for (int i = 0; i < 4; ++i) {
    st[i].path = &paths[i];
    st[i].occupied = c.occupied(paths[i].corner);
    st[i].full = true;
    for (const Cell& v : paths[i].vertices)
      if (!c.occupied(v)) {
        st[i].full = false;
        break;
      }
    if (st[i].occupied)
      for (const Cell& v : paths[i].vertices) {
        if (!c.occupied(v)) break;
        st[i].prefix.push_back(v);
      }
  }
  return st;
}

// The whole occupied prefix advances one vertex along its path; the last
// robot steps into the first empty vertex.
void shift_prefix(const PathState& s, std::map<Cell, Cell>& dest) {
  if (s.full) throw InternalError("cannot shift a fully occupied special path");
  for (size_t i = 0; i < s.prefix.size(); ++i) dest[s.prefix[i]] = s.path->vertices[i + 1];
}

MovePlan t1c_plan(const Configuration& c) {
  Rect grid_rect{1, 1, c.grid.rows, c.grid.cols};
  auto paths = special_paths(grid_rect);
  auto st = path_states(c, paths);
  int p = 0;
  for (const auto& s : st)
    if (s.full) ++p;

  std::map<Cell, Cell> dest;
  if (p >= 2) {
    // Only on a 4x4 grid with two fully occupied paths on successive
    // corners: a single corner robot has an empty neighbour and steps off.
    const int M = c.grid.rows, N = c.grid.cols;
    std::vector<std::pair<Cell, Cell>> movers;
    for (const Cell& k : c.grid.corners()) {
      if (!c.occupied(k)) continue;
      std::array<Cell, 2> nb;  // clockwise neighbour first
      if (k == Cell{1, 1}) nb = {Cell{1, 2}, Cell{2, 1}};
      else if (k == Cell{1, N}) nb = {Cell{2, N}, Cell{1, N - 1}};
      else if (k == Cell{M, N}) nb = {Cell{M, N - 1}, Cell{M - 1, N}};
      else nb = {Cell{M - 1, 1}, Cell{M, 2}};
      for (const Cell& x : nb)
        if (!c.occupied(x)) {
          movers.emplace_back(k, x);
          break;
        }
    }
    if (movers.size() != 1)
      throw InternalError("t1c p=2 expects a unique movable corner robot");
    dest[movers[0].first] = movers[0].second;
  } else {
    const PathState* keep = nullptr;
    if (p == 1) {
      for (const auto& s : st)
        if (s.full) keep = &s;
    } else {
      ViewOrder view(c);
      for (const auto& s : st) {
        if (!s.occupied) continue;
        if (!keep || view.less(s.path->corner, keep->path->corner)) keep = &s;
      }
    }
    if (!keep) throw InternalError("t1c requires an occupied special path");
    for (const auto& s : st) {
      if (!s.occupied || s.path == keep->path) continue;
      shift_prefix(s, dest);
    }
  }
  return plan_from_dest(TaskId::T1c, dest);
}

MovePlan asym_board_plan(const Configuration& c, TaskId task) {
  AsymCtx ctx = make_asym_ctx(c);
  std::map<Cell, Cell> canon_dest =
      task == TaskId::T2 ? t2_compute(ctx.board).dest : t3_compute(ctx.board);
  std::map<Cell, Cell> dest;
  for (const auto& [src, dst] : canon_dest)
    dest[ctx.frame.to_global(src)] = ctx.frame.to_global(dst);
  return plan_from_dest(task, dest);
}

MovePlan t4_plan(const Configuration& c) {
  AsymCtx ctx = make_asym_ctx(c);
  MovePlan plan;
  plan.task = TaskId::T4;
  plan.moves.emplace_back(ctx.guard_global, ctx.frame.to_global(ctx.guard_target));
  return plan;
}

MovePlan asym_plan(const Configuration& c) {
  switch (classify_asym(c)) {
    case TaskId::T5: {
      MovePlan plan;
      plan.task = TaskId::T5;
      return plan;
    }
    case TaskId::T4: return t4_plan(c);
    case TaskId::T3: return asym_board_plan(c, TaskId::T3);
    case TaskId::T2: return asym_board_plan(c, TaskId::T2);
    case TaskId::T1c: return t1c_plan(c);
    case TaskId::T1b: return t1b_plan(c);
    case TaskId::T1a: return t1a_plan(c);
  }
  throw InternalError("unreachable");
}

// ---------------------------------------------------------------------------
// Symmetric finite-grid pipeline
// ---------------------------------------------------------------------------

std::vector<Cell> orbit_of(const Cell& r, const Center& ctr, int rho) {
  std::vector<Cell> orb{r};
  const int step = rho == 4 ? 1 : 2;
  Cell x = r;
  for (;;) {
    x = rotate_cell(x, ctr, step);
    if (x == r) break;
    orb.push_back(x);
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

struct SymCtx {
  int rho = 0;
  int tc = 0;
  Center center;
  const Pattern* pat = nullptr;
  int orientation = 0;         // quarter-turns applied to the pattern box
  std::vector<Cell> embedded;  // F in grid coordinates, sorted
};

SymCtx make_sym_ctx(const Configuration& c, const SymmetryInfo& info) {
  SymCtx ctx;
  ctx.rho = info.grid_order;
  ctx.tc = info.tc;
  ctx.center = info.center;
  ctx.pat = &sym_pattern(c.size(), ctx.rho, ctx.tc);
  ctx.orientation = (c.grid.rows - ctx.pat->box_rows) % 2 == 0 ? 0 : 1;
  ctx.embedded = embed_centered(*ctx.pat, c.grid, ctx.orientation);
  return ctx;
}

// Sector of one guard corner, a rectangle in that corner's canonical frame
// re-based so the guard sits at (1, cols). A shared central row (rho 2 on
// odd-height frames) is included with a column restriction on its content.
struct Sector {
  Frame frame;
  int rows = 0, cols = 0;
  int col_offset = 0;                 // canonical col = local col + offset
  std::optional<int> shared_min_col;  // canonical min col on the shared row
  std::optional<Cell> forbidden_global;
  Cell guard_global;
  T2Board board;
  Cell guard_target_local{0, 0};
};

bool cell_in_sector(const Sector& s, const Cell& canon) {
  if (canon.row < 1 || canon.row > s.rows) return false;
  if (canon.col <= s.col_offset || canon.col > s.col_offset + s.cols) return false;
  if (s.shared_min_col && canon.row == s.rows && canon.col < *s.shared_min_col) return false;
  return true;
}

std::vector<Sector> make_sectors(const Configuration& c, const SymCtx& ctx,
                                 const std::vector<Cell>& guards) {
  std::vector<Sector> out;
  for (const Cell& g : guards) {
    Sector s;
    s.guard_global = g;
    s.frame = Frame::for_corner(c.grid, corner_id_of(c.grid, g));
    const int M = s.frame.rows(), N = s.frame.cols();
    if (ctx.rho == 4) {
      if (ctx.tc == 3) {
        s.rows = M / 2;
        s.cols = N / 2;
      } else {  // tc == 1: quadrant plus the half-line on its clockwise edge
        s.rows = (M + 1) / 2;
        s.cols = (N - 1) / 2;
      }
      s.col_offset = N - s.cols;
    } else {
      s.cols = N;
      s.col_offset = 0;
      if (M % 2 == 0) {
        s.rows = M / 2;
      } else {
        s.rows = (M + 1) / 2;
        s.shared_min_col = (N % 2 == 0 ? N / 2 : (N + 1) / 2) + 1;
        if (N % 2 == 1) {
          s.board.forbidden = Cell{s.rows, (N + 1) / 2};
          s.forbidden_global = s.frame.to_global({s.rows, (N + 1) / 2});
        }
      }
    }

    s.board.rows = s.rows;
    s.board.col_lo = 1;
    s.board.col_hi = s.cols;
    s.board.corner_rules = true;
    s.board.side_center = s.cols / 2.0;
    s.board.guard = Cell{1, s.cols};

    for (const Cell& r : c.robots) {
      if (r == g) continue;
      Cell canon = s.frame.to_canonical(r);
      if (!cell_in_sector(s, canon)) continue;
      s.board.robots.push_back({canon.row, canon.col - s.col_offset});
    }
    std::vector<Cell> targets;
    for (const Cell& t : ctx.embedded) {
      Cell canon = s.frame.to_canonical(t);
      if (!cell_in_sector(s, canon)) continue;
      targets.push_back({canon.row, canon.col - s.col_offset});
    }
    std::sort(targets.begin(), targets.end());
    if (targets.empty()) throw InternalError("sector without targets");

    // The guard's own target: nearest sector target, upper rows first,
    // rightmost on full ties. This keeps its approach path clear of the
    // other targets.
    const Cell guard_local{1, s.cols};
    std::optional<Cell> gt;
    for (const Cell& t : targets) {
      auto key = std::tuple(manhattan(t, guard_local), t.row, -t.col);
      if (!gt || key < std::tuple(manhattan(*gt, guard_local), gt->row, -gt->col)) gt = t;
    }
    s.guard_target_local = *gt;
    for (const Cell& t : targets)
      if (t != *gt) s.board.targets.push_back(t);
    std::sort(s.board.robots.begin(), s.board.robots.end());

    int tmin = std::numeric_limits<int>::max(), tmax = 0;
    for (const Cell& t : targets) {
      tmin = std::min(tmin, t.row);
      tmax = std::max(tmax, t.row);
    }
    s.board.protection = (tmin == 1 && tmax == s.rows);
    out.push_back(std::move(s));
  }
  return out;
}

Cell sector_to_global(const Sector& s, const Cell& local) {
  return s.frame.to_global({local.row, local.col + s.col_offset});
}

// Cross-sector safety: no move may land on the exact center, on a robot
// that stays put, or share a destination with another move.
void arbitrate(std::map<Cell, Cell>& dest, const std::optional<Cell>& forbidden) {
  if (forbidden)
    for (auto& [src, dst] : dest)
      if (src != dst && dst == *forbidden) dst = src;
  for (;;) {
    bool changed = false;
    std::map<Cell, int> incoming;
    for (const auto& [src, dst] : dest)
      if (src != dst) ++incoming[dst];
    for (auto& [src, dst] : dest) {
      if (src == dst) continue;
      auto occupant = dest.find(dst);
      const bool occupied_still = occupant != dest.end() && occupant->second == dst;
      if (occupied_still || incoming[dst] > 1) {
        dst = src;
        changed = true;
      }
    }
    if (!changed) break;
  }
}

// Occupied corners count as a guard placement only when they form a full
// rotation orbit of the expected size.
std::vector<Cell> guard_corner_cells(const Configuration& c, int rho) {
  auto occ = occupied_grid_corners(c);
  if (static_cast<int>(occ.size()) != rho) return {};
  if (rho == 2) {
    const Cell a = occ[0], b = occ[1];
    if (a.row == b.row || a.col == b.col) return {};  // adjacent, not opposite
  }
  return occ;
}

MovePlan center_break_plan(const Configuration& c, const SymmetryInfo& info) {
  const Cell rc{info.center.row2 / 2, info.center.col2 / 2};
  const std::array<Cell, 4> nb = {Cell{rc.row - 1, rc.col}, Cell{rc.row, rc.col + 1},
                                  Cell{rc.row + 1, rc.col}, Cell{rc.row, rc.col - 1}};
  std::map<Cell, Cell> dest;
  for (const Cell& x : nb)
    if (c.grid.contains(x) && !c.occupied(x)) {
      dest[rc] = x;
      return plan_from_dest(TaskId::T1a, dest);
    }
  // All four neighbours occupied: shift each occupied run outward along its
  // row or column into the first empty vertex, where one exists in-grid.
  bool any = false;
  for (int dir = 0; dir < 4; ++dir) {
    const int dr = dir == 0 ? -1 : dir == 2 ? 1 : 0;
    const int dc = dir == 1 ? 1 : dir == 3 ? -1 : 0;
    std::vector<Cell> run;
    Cell x{rc.row + dr, rc.col + dc};
    while (c.grid.contains(x) && c.occupied(x)) {
      run.push_back(x);
      x = {x.row + dr, x.col + dc};
    }
    if (!c.grid.contains(x)) continue;  // saturated to the side
    for (const Cell& r : run) dest[r] = {r.row + dr, r.col + dc};
    any = true;
  }
  if (!any) {
    // Saturated row and column: each neighbour steps to the vertex on its
    // right with respect to the center, when empty.
    const std::array<Cell, 4> diag = {Cell{rc.row - 1, rc.col + 1}, Cell{rc.row + 1, rc.col + 1},
                                      Cell{rc.row + 1, rc.col - 1}, Cell{rc.row - 1, rc.col - 1}};
    for (int i = 0; i < 4; ++i)
      if (c.grid.contains(diag[i]) && !c.occupied(diag[i])) dest[nb[i]] = diag[i];
  }
  if (dest.empty()) throw InternalError("center break found no move");
  return plan_from_dest(TaskId::T1a, dest);
}

std::vector<std::vector<Cell>> robot_orbits(const Configuration& c, const SymmetryInfo& info) {
  std::vector<std::vector<Cell>> orbits;
  std::set<Cell> seen;
  for (const Cell& r : c.robots) {
    if (seen.count(r)) continue;
    auto orb = orbit_of(r, info.center, info.grid_order);
    for (const Cell& x : orb) seen.insert(x);
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

// View key of an orbit: the sorted view ranks of its members.
// Rotation-invariant, computable by every robot from its snapshot.
std::vector<int> orbit_view_key(const std::vector<Cell>& orb, const std::map<Cell, int>& vr) {
  std::vector<int> key;
  key.reserve(orb.size());
  for (const Cell& r : orb) key.push_back(vr.at(r));
  std::sort(key.begin(), key.end());
  return key;
}

// Equivariant side preference: clockwise scan starting from the member's
// outward direction relative to the configuration center.
std::array<int, 4> side_preference(const Cell& r, const Center& ctr) {
  const int dr = 2 * r.row - ctr.row2;
  const int dc = 2 * r.col - ctr.col2;
  int start;
  if (std::abs(dr) > std::abs(dc)) start = dr < 0 ? 0 : 2;
  else if (std::abs(dc) > std::abs(dr)) start = dc > 0 ? 1 : 3;
  else if (dr < 0 && dc > 0) start = 0;  // NE diagonal
  else if (dr > 0 && dc > 0) start = 1;  // SE
  else if (dr > 0 && dc < 0) start = 2;  // SW
  else start = 3;                        // NW
  return {start, (start + 1) % 4, (start + 2) % 4, (start + 3) % 4};
}

MovePlan sym_t1a_plan(const Configuration& c, const SymmetryInfo& info) {
  auto orbits = robot_orbits(c, info);
  auto vr = view_rank(c);
  const std::vector<Cell>* best = nullptr;
  int best_d = -1;
  std::vector<int> best_key;
  for (const auto& orb : orbits) {
    if (!has_free_neighbor(c, orb.front())) continue;
    int d = total_distance(c, orb.front());
    auto key = orbit_view_key(orb, vr);
    if (d > best_d || (d == best_d && key < best_key)) {
      best = &orb;
      best_d = d;
      best_key = std::move(key);
    }
  }
  if (!best) throw InternalError("sym t1a: no movable orbit");
  const int M = c.grid.rows, N = c.grid.cols;
  std::map<Cell, Cell> dest;
  for (const Cell& r : *best) {
    auto pref = side_preference(r, info.center);
    const std::array<std::pair<int, Cell>, 4> side = {
        std::pair{r.row - 1, Cell{r.row - 1, r.col}},
        std::pair{N - r.col, Cell{r.row, r.col + 1}},
        std::pair{M - r.row, Cell{r.row + 1, r.col}},
        std::pair{r.col - 1, Cell{r.row, r.col - 1}},
    };
    std::optional<Cell> step;
    int sd = std::numeric_limits<int>::max();
    for (int pi = 0; pi < 4; ++pi) {
      const auto& [dist, cell] = side[pref[pi]];
      if (!c.grid.contains(cell) || c.occupied(cell)) continue;
      if (dist < sd) {
        sd = dist;
        step = cell;
      }
    }
    if (!step) throw InternalError("sym t1a member has no free step");
    dest[r] = *step;
  }
  arbitrate(dest, std::nullopt);
  return plan_from_dest(TaskId::T1a, dest);
}

// Perimeter coordinate, walked clockwise from the top-left corner.
int perimeter_pos(const GridSpec& g, const Cell& r) {
  const int M = g.rows, N = g.cols;
  if (r.row == 1) return r.col - 1;
  if (r.col == N) return (N - 1) + (r.row - 1);
  if (r.row == M) return (N - 1) + (M - 1) + (N - r.col);
  if (r.col == 1) return 2 * (N - 1) + (M - 1) + (M - r.row);
  throw InternalError("cell not on the perimeter");
}

MovePlan sym_t1b_plan(const Configuration& c, const SymmetryInfo& info) {
  auto orbits = robot_orbits(c, info);
  auto vr = view_rank(c);
  const std::vector<Cell>* best = nullptr;
  int best_d = std::numeric_limits<int>::max();
  std::vector<int> best_key;
  for (const auto& orb : orbits) {
    if (!c.grid.on_side(orb.front())) continue;
    int d = nearest_corner_distance(c.grid, orb.front());
    auto key = orbit_view_key(orb, vr);
    if (d < best_d || (d == best_d && key < best_key)) {
      best = &orb;
      best_d = d;
      best_key = std::move(key);
    }
  }
  if (!best) throw InternalError("sym t1b: no side orbit");
  const int per = 2 * (c.grid.rows - 1) + 2 * (c.grid.cols - 1);
  std::map<Cell, Cell> dest;
  for (const Cell& r : *best) {
    // Tied corners resolve to the first reached walking clockwise from the
    // robot itself, which every rotated sibling resolves consistently.
    std::optional<Cell> target;
    int cw_best = std::numeric_limits<int>::max();
    for (const Cell& k : c.grid.corners()) {
      if (manhattan(r, k) != best_d) continue;
      int cw = ((perimeter_pos(c.grid, k) - perimeter_pos(c.grid, r)) % per + per) % per;
      if (cw < cw_best) {
        cw_best = cw;
        target = k;
      }
    }
    Cell step = r;
    if (r.row == target->row) step.col += target->col > r.col ? 1 : -1;
    else if (r.col == target->col) step.row += target->row > r.row ? 1 : -1;
    else throw InternalError("sym t1b mover does not share a side with its corner");
    dest[r] = step;
  }
  arbitrate(dest, std::nullopt);
  return plan_from_dest(TaskId::T1b, dest);
}

MovePlan sym_t1c_plan(const Configuration& c, const SymmetryInfo& info) {
  // rho == 2 with all four corners occupied: empty one opposite pair.
  Rect grid_rect{1, 1, c.grid.rows, c.grid.cols};
  auto paths = special_paths(grid_rect);
  auto st = path_states(c, paths);
  std::set<Cell> keep_corners;
  bool have_full = false;
  for (const auto& s : st)
    if (s.full) {
      keep_corners.insert(s.path->corner);
      have_full = true;
    }
  if (!have_full) {
    ViewOrder view(c);
    const Cell* best = nullptr;
    for (const auto& s : st)
      if (s.occupied && (!best || view.less(s.path->corner, *best))) best = &s.path->corner;
    keep_corners.insert(*best);
    keep_corners.insert(rotate_cell(*best, info.center, 2));
  }
  std::map<Cell, Cell> dest;
  for (const auto& s : st) {
    if (!s.occupied || keep_corners.count(s.path->corner)) continue;
    shift_prefix(s, dest);
  }
  return plan_from_dest(TaskId::T1c, dest);
}

// The two-leg approach of a walker to its target: along the quadrant
// corner's first row until column-aligned, then straight in.
std::vector<Cell> walk_route(const GridSpec& g, const Cell& w, const Cell& m) {
  const bool north = w.row <= m.row;
  const bool east = w.col >= m.col;
  const int corner_id = north ? (east ? kCornerTR : kCornerTL) : (east ? kCornerBR : kCornerBL);
  Frame f = Frame::for_corner(g, corner_id);
  const Cell wl = f.to_canonical(w);
  const Cell ml = f.to_canonical(m);
  std::vector<Cell> route;
  const int dc = ml.col > wl.col ? 1 : -1;
  for (int col = wl.col + dc; col != ml.col + dc && wl.col != ml.col; col += dc)
    route.push_back(f.to_global({wl.row, col}));
  const int dr = ml.row > wl.row ? 1 : -1;
  for (int row = wl.row + dr; row != ml.row + dr && wl.row != ml.row; row += dr)
    route.push_back(f.to_global({row, ml.col}));
  return route;
}

// Walkers form rotation orbits; assign each orbit representative to its
// nearest leftover target and propagate the pairing by rotation, so
// equivalent robots walk to equivalent targets. Returns nothing when some
// walker's approach is blocked: such configurations re-enter the placement
// pipeline instead of walking.
std::optional<MovePlan> sym_t4_plan(const Configuration& c, const SymmetryInfo& info,
                                    const std::vector<Cell>& walkers,
                                    const std::vector<Cell>& missing) {
  std::map<Cell, Cell> assigned;
  std::set<Cell> taken, seen;
  std::vector<Cell> sorted_walkers = walkers;
  std::sort(sorted_walkers.begin(), sorted_walkers.end());
  const int turn = info.grid_order == 4 ? 1 : 2;
  for (const Cell& w : sorted_walkers) {
    if (seen.count(w)) continue;
    auto orb = orbit_of(w, info.center, info.grid_order);
    for (const Cell& x : orb) {
      if (!std::binary_search(sorted_walkers.begin(), sorted_walkers.end(), x))
        return std::nullopt;
      seen.insert(x);
    }
    const Cell rep = orb.front();
    const Cell* best = nullptr;
    for (const Cell& m : missing) {
      if (taken.count(m)) continue;
      auto key = std::tuple(manhattan(rep, m), m.row, m.col);
      if (!best || key < std::tuple(manhattan(rep, *best), best->row, best->col)) best = &m;
    }
    if (!best) return std::nullopt;
    Cell wj = rep, mj = *best;
    do {
      assigned[wj] = mj;
      taken.insert(mj);
      wj = rotate_cell(wj, info.center, turn);
      mj = rotate_cell(mj, info.center, turn);
    } while (wj != rep);
  }

  for (const auto& [w, m] : assigned)
    for (const Cell& cell : walk_route(c.grid, w, m))
      if (c.occupied(cell)) return std::nullopt;

  std::map<Cell, Cell> dest;
  for (const auto& [w, m] : assigned) {
    const bool north = w.row <= m.row;
    const bool east = w.col >= m.col;
    const int corner_id = north ? (east ? kCornerTR : kCornerTL)
                                : (east ? kCornerBR : kCornerBL);
    Frame f = Frame::for_corner(c.grid, corner_id);
    const Cell wl = f.to_canonical(w);
    const Cell ml = f.to_canonical(m);
    Cell stepl;
    if (wl.col != ml.col) stepl = {wl.row, wl.col + (ml.col > wl.col ? 1 : -1)};
    else stepl = {wl.row + (ml.row > wl.row ? 1 : -1), wl.col};
    dest[w] = f.to_global(stepl);
  }
  return plan_from_dest(TaskId::T4, dest);
}

MovePlan sym_plan(const Configuration& c, const SymmetryInfo& info) {
  SymCtx ctx = make_sym_ctx(c, info);
  if (ctx.embedded == c.robots) {
    MovePlan plan;
    plan.task = TaskId::T5;
    return plan;
  }
  std::vector<Cell> unmatched, missing;
  std::set_difference(c.robots.begin(), c.robots.end(), ctx.embedded.begin(),
                      ctx.embedded.end(), std::back_inserter(unmatched));
  std::set_difference(ctx.embedded.begin(), ctx.embedded.end(), c.robots.begin(),
                      c.robots.end(), std::back_inserter(missing));
  if (static_cast<int>(unmatched.size()) == ctx.rho &&
      static_cast<int>(missing.size()) == ctx.rho) {
    if (auto plan = sym_t4_plan(c, info, unmatched, missing)) return *plan;
  }

  auto guards = guard_corner_cells(c, ctx.rho);
  if (!guards.empty()) {
    auto sectors = make_sectors(c, ctx, guards);
    bool balanced = true;
    for (const auto& s : sectors)
      if (!t2_balanced(s.board)) balanced = false;
    std::map<Cell, Cell> dest;
    std::optional<Cell> forbidden;
    for (const auto& s : sectors) {
      if (s.forbidden_global) forbidden = s.forbidden_global;
      std::map<Cell, Cell> local =
          balanced ? t3_compute(s.board) : t2_compute(s.board).dest;
      for (const auto& [src, dst] : local)
        dest[sector_to_global(s, src)] = sector_to_global(s, dst);
    }
    arbitrate(dest, forbidden);
    return plan_from_dest(balanced ? TaskId::T3 : TaskId::T2, dest);
  }

  PerimeterStats ps = perimeter_stats(c);
  if (ctx.rho == 2 && ps.on_corners == 4) return sym_t1c_plan(c, info);
  if (ps.on_corners != 0)
    throw InternalError("unexpected corner occupancy in symmetric mode");
  if (ps.on_sides >= 1) return sym_t1b_plan(c, info);
  return sym_t1a_plan(c, info);
}

// ---------------------------------------------------------------------------
// Infinite-grid pipeline
// ---------------------------------------------------------------------------

// Rotation of unbounded cells about the origin, used to canonicalize the
// guard's excursion side to "north of the cluster".
Cell rot_cell(const Cell& c, int quarter_turns) {
  Cell x = c;
  quarter_turns = ((quarter_turns % 4) + 4) % 4;
  for (int i = 0; i < quarter_turns; ++i) x = {x.col, -x.row};
  return x;
}

bool infinite_formed(const Configuration& c) {
  const Pattern& p = asym_pattern(c.size());
  Rect box = mbr(c);
  if (box.height() != p.box_rows || box.width() != p.box_cols) return false;
  for (int o = 0; o < 4; ++o) {
    std::vector<Cell> rotated;
    for (const Cell& cell : p.cells) {
      Cell x = cell;
      for (int i = 0; i < o; ++i) x = {x.col, p.box_rows + 1 - x.row};  // square box
      rotated.push_back(x);
    }
    std::vector<Cell> shifted;
    Rect rbox = mbr(std::span<const Cell>(rotated));
    for (const Cell& x : rotated)
      shifted.push_back({x.row - rbox.top + box.top, x.col - rbox.left + box.left});
    std::sort(shifted.begin(), shifted.end());
    if (shifted == c.robots) return true;
  }
  return false;
}

struct InfGuard {
  Cell guard;
  std::vector<Cell> others;
};

int excursion_required(const Rect& others_box, int n) {
  const int k = (n + 1) / 2;
  return 3 * std::max(std::max(others_box.height(), others_box.width()), k);
}

std::optional<InfGuard> recognize_guard(const Configuration& c) {
  std::optional<InfGuard> found;
  for (const Cell& r : c.robots) {
    std::vector<Cell> others;
    for (const Cell& x : c.robots)
      if (x != r) others.push_back(x);
    Rect box = mbr(std::span<const Cell>(others));
    if (manhattan_to_rect(r, box) >= excursion_required(box, c.size())) {
      if (found) throw InternalError("two robots qualify as the far guard");
      found = InfGuard{r, std::move(others)};
    }
  }
  return found;
}

// Quarter-turns (cw) that bring the guard's dominant side to "north";
// clockwise preference on equal gaps.
int guard_side_rotation(const Cell& guard, const Rect& box) {
  const std::array<int, 4> gaps = {box.top - guard.row, guard.col - box.right,
                                   guard.row - box.bottom, box.left - guard.col};
  int side = 0, best = std::numeric_limits<int>::min();
  for (int i = 0; i < 4; ++i)
    if (gaps[i] > best) {
      best = gaps[i];
      side = i;
    }
  return (4 - side) % 4;
}

MovePlan infinite_outbound(const Configuration& c) {
  Cell g = elect_max_distance(c, false);
  if (!has_free_neighbor(c, g)) g = elect_max_distance(c, true);
  std::vector<Cell> others;
  for (const Cell& x : c.robots)
    if (x != g) others.push_back(x);
  Rect box = mbr(std::span<const Cell>(others));

  Cell step;
  if (manhattan_to_rect(g, box) == 0) {
    // Inside the cluster: step toward the nearest cluster side with a free
    // cell, clockwise preference from the top.
    struct Option {
      int dist;
      int pref;
      Cell step;
    };
    std::array<Option, 4> opts = {
        Option{g.row - box.top, 0, {g.row - 1, g.col}},
        Option{box.right - g.col, 1, {g.row, g.col + 1}},
        Option{box.bottom - g.row, 2, {g.row + 1, g.col}},
        Option{g.col - box.left, 3, {g.row, g.col - 1}},
    };
    std::sort(opts.begin(), opts.end(), [](const Option& a, const Option& b) {
      return std::tie(a.dist, a.pref) < std::tie(b.dist, b.pref);
    });
    std::optional<Cell> chosen;
    for (const Option& o : opts)
      if (!c.occupied(o.step)) {
        chosen = o.step;
        break;
      }
    if (!chosen) throw InternalError("outbound robot is walled in");
    step = *chosen;
  } else {
    // Outside: align with the parking column one left of the cluster's
    // canonical top-right corner, then climb. All cells beyond the cluster
    // side are free.
    const int rot = guard_side_rotation(g, box);
    Cell gl = rot_cell(g, rot);
    std::vector<Cell> obl;
    obl.reserve(others.size());
    for (const Cell& x : others) obl.push_back(rot_cell(x, rot));
    Rect bl = mbr(std::span<const Cell>(obl));
    const int park_col = bl.right - 1;
    Cell stepl;
    if (gl.col != park_col) stepl = {gl.row, gl.col + (park_col > gl.col ? 1 : -1)};
    else stepl = {gl.row - 1, gl.col};
    step = rot_cell(stepl, (4 - rot) % 4);
    if (c.occupied(step)) throw InternalError("outbound walk is blocked");
  }
  std::map<Cell, Cell> dest;
  dest[g] = step;
  return plan_from_dest(TaskId::T1a, dest);
}

// During the guard's final approach the other robots already sit on the
// pattern minus the guard's target, which any robot can recognize without
// remembering the excursion. Returns the walker's single descending step.
std::optional<MovePlan> infinite_t4(const Configuration& c) {
  const Pattern& p = asym_pattern(c.size());
  std::vector<Cell> partial;  // pattern minus the guard target, local coords
  const Cell tg_local{1, p.box_cols - 1};
  for (const Cell& t : p.cells)
    if (t != tg_local) partial.push_back(t);

  for (const Cell& w : c.robots) {
    std::vector<Cell> others;
    for (const Cell& x : c.robots)
      if (x != w) others.push_back(x);
    Rect obox = mbr(std::span<const Cell>(others));
    for (int o = 0; o < 4; ++o) {
      std::vector<Cell> rot;
      rot.reserve(partial.size());
      Cell tg = tg_local;
      for (const Cell& t : partial) {
        Cell x = t;
        for (int i = 0; i < o; ++i) x = {x.col, p.box_rows + 1 - x.row};
        rot.push_back(x);
      }
      for (int i = 0; i < o; ++i) tg = {tg.col, p.box_rows + 1 - tg.row};
      Rect rbox = mbr(std::span<const Cell>(rot));
      const int dr = obox.top - rbox.top, dc = obox.left - rbox.left;
      for (Cell& x : rot) x = {x.row + dr, x.col + dc};
      std::sort(rot.begin(), rot.end());
      if (rot != others) continue;
      Cell tg_global{tg.row + dr, tg.col + dc};
      // The walker must approach its target straight from outside the box.
      Cell step;
      if (w.col == tg_global.col && w.row < obox.top) step = {w.row + 1, w.col};
      else if (w.col == tg_global.col && w.row > obox.bottom) step = {w.row - 1, w.col};
      else if (w.row == tg_global.row && w.col > obox.right) step = {w.row, w.col - 1};
      else if (w.row == tg_global.row && w.col < obox.left) step = {w.row, w.col + 1};
      else continue;
      if (c.occupied(step)) continue;
      MovePlan plan;
      plan.task = TaskId::T4;
      plan.moves.emplace_back(w, step);
      return plan;
    }
  }
  return std::nullopt;
}

MovePlan infinite_plan(const Configuration& c) {
  if (infinite_formed(c)) {
    MovePlan plan;
    plan.task = TaskId::T5;
    return plan;
  }
  if (auto t4 = infinite_t4(c)) return *t4;
  auto rec = recognize_guard(c);
  if (!rec) return infinite_outbound(c);

  Rect gbox = mbr(std::span<const Cell>(rec->others));
  const int rot = guard_side_rotation(rec->guard, gbox);
  const Cell gl = rot_cell(rec->guard, rot);
  std::vector<Cell> others;
  others.reserve(rec->others.size());
  for (const Cell& x : rec->others) others.push_back(rot_cell(x, rot));
  std::sort(others.begin(), others.end());
  Rect box = mbr(std::span<const Cell>(others));

  const Pattern& p = asym_pattern(c.size());
  // The pattern's top-right corner sits on the cluster's first row, one
  // column right of the guard; the guard target is directly below the guard.
  const int corner_col = gl.col + 1;
  const int row0 = box.top - 1;  // pattern row r -> rotated row row0 + r
  const Cell tg{row0 + 1, corner_col - 1};
  std::vector<Cell> targets;
  for (const Cell& t : p.cells) {
    Cell cell{row0 + t.row, corner_col - p.box_cols + t.col};
    if (cell != tg) targets.push_back(cell);
  }
  std::sort(targets.begin(), targets.end());

  std::map<Cell, Cell> dest;
  TaskId task;
  {
    T2Board board;
    int max_row = row0 + p.box_rows;
    for (const Cell& r : others) max_row = std::max(max_row, r.row);
    board.rows = max_row - row0;
    board.col_lo = std::numeric_limits<int>::min() / 2;
    board.col_hi = std::numeric_limits<int>::max() / 2;
    board.protection = false;
    board.corner_rules = false;
    board.side_center = corner_col - (p.box_cols - 1) / 2.0 - 0.5;
    board.guard = std::nullopt;
    for (const Cell& r : others) board.robots.push_back({r.row - row0, r.col});
    for (const Cell& t : targets) board.targets.push_back({t.row - row0, t.col});
    std::sort(board.robots.begin(), board.robots.end());
    std::sort(board.targets.begin(), board.targets.end());
    if (t2_balanced(board)) {
      task = TaskId::T3;
      for (const auto& [src, dst] : t3_compute(board))
        dest[{src.row + row0, src.col}] = {dst.row + row0, dst.col};
    } else {
      task = TaskId::T2;
      for (const auto& [src, dst] : t2_compute(board).dest)
        dest[{src.row + row0, src.col}] = {dst.row + row0, dst.col};
    }
  }
  std::map<Cell, Cell> global;
  const int inv = (4 - rot) % 4;
  for (const auto& [src, dst] : dest) global[rot_cell(src, inv)] = rot_cell(dst, inv);
  return plan_from_dest(task, global);
}

}  // namespace

Cell elect_guard(const Configuration& c) {
  const SymmetryInfo info = rotation_group(c);
  if ((c.grid.finite ? info.grid_order : info.set_order) != 1)
    throw DomainError("guard election requires an asymmetric configuration");
  return elect_max_distance(c, false);
}

MovePlan move_t1a(const Configuration& c) {
  if (classify_asym(c) != TaskId::T1a) throw DomainError("configuration is not in T1a");
  return t1a_plan(c);
}

MovePlan move_t1b(const Configuration& c) {
  if (classify_asym(c) != TaskId::T1b) throw DomainError("configuration is not in T1b");
  return t1b_plan(c);
}

MovePlan move_t1c(const Configuration& c) {
  if (classify_asym(c) != TaskId::T1c) throw DomainError("configuration is not in T1c");
  return t1c_plan(c);
}

MovePlan move_t2(const Configuration& c) {
  if (classify_asym(c) != TaskId::T2) throw DomainError("configuration is not in T2");
  return asym_board_plan(c, TaskId::T2);
}

MovePlan move_t3(const Configuration& c) {
  if (classify_asym(c) != TaskId::T3) throw DomainError("configuration is not in T3");
  return asym_board_plan(c, TaskId::T3);
}

MovePlan move_t4(const Configuration& c) {
  if (classify_asym(c) != TaskId::T4) throw DomainError("configuration is not in T4");
  return t4_plan(c);
}

MovePlan symmetric_driver(const Configuration& c) {
  if (!c.grid.finite) throw DomainError("symmetric driver requires a finite grid");
  SymmetryInfo info = rotation_group(c);
  if (info.grid_order == 1)
    throw DomainError("configuration is asymmetric; use the asymmetric pipeline");
  if (info.rho == 1) return center_break_plan(c, info);
  return sym_plan(c, info);
}

MovePlan infinite_driver(const Configuration& c) {
  if (c.grid.finite) throw DomainError("infinite driver requires an infinite grid");
  return infinite_plan(c);
}

MovePlan compute_plan(const Configuration& c, Mode mode) {
  switch (mode) {
    case Mode::Infinite:
      return infinite_driver(c);
    case Mode::Asym: {
      if (!c.grid.finite) throw DomainError("asym mode requires a finite grid");
      if (rotation_group(c).grid_order != 1)
        throw DomainError("configuration symmetric; use --mode general");
      return asym_plan(c);
    }
    case Mode::General: {
      if (!c.grid.finite) throw DomainError("general mode requires a finite grid");
      SymmetryInfo info = rotation_group(c);
      if (info.grid_order > 1) {
        if (info.rho == 1) return center_break_plan(c, info);
        return sym_plan(c, info);
      }
      return asym_plan(c);
    }
  }
  throw InternalError("unreachable");
}

TaskId classify(const Configuration& c, Mode mode) { return compute_plan(c, mode).task; }

void validate_run_input(const Configuration& c, Mode mode) {
  const int n = c.size();
  if (n < 7) throw DomainError("algorithm runs require at least 7 robots");
  if (mode == Mode::Infinite) {
    if (c.grid.finite) throw DomainError("infinite mode requires an infinite grid header");
    return;
  }
  if (!c.grid.finite) throw DomainError("finite modes require a finite grid");
  const int k = (n + 1) / 2;
  if (c.grid.rows < k || c.grid.cols < k)
    throw DomainError("grid must have at least ceil(n/2) rows and columns");
  if (mode == Mode::Asym && rotation_group(c).grid_order != 1)
    throw DomainError("configuration symmetric; use --mode general");
}

}  // namespace gmv
