#include "gmv/patterns.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "gmv/symmetry.hpp"
#include "gmv/visibility.hpp"

namespace gmv {

namespace {

// Occupancy board for the pattern searches.
struct Board {
  int rows, cols;
  std::vector<char> occ;
  std::vector<int> row_cnt, col_cnt;

  Board(int r, int c) : rows(r), cols(c), occ(static_cast<size_t>(r) * c, 0),
                        row_cnt(r + 1, 0), col_cnt(c + 1, 0) {}
  char& at(const Cell& x) { return occ[static_cast<size_t>(x.row - 1) * cols + (x.col - 1)]; }
  char at(const Cell& x) const { return occ[static_cast<size_t>(x.row - 1) * cols + (x.col - 1)]; }
  void add(const Cell& x) { at(x) = 1; ++row_cnt[x.row]; ++col_cnt[x.col]; }
  void remove(const Cell& x) { at(x) = 0; --row_cnt[x.row]; --col_cnt[x.col]; }
};

bool visible_on_board(const Board& b, const Cell& u, const Cell& v) {
  const int dr = v.row >= u.row ? 1 : -1;
  const int dc = v.col >= u.col ? 1 : -1;
  const int nr = std::abs(v.row - u.row) + 1;
  const int nc = std::abs(v.col - u.col) + 1;
  // Row-sweep over the spanned rectangle; boxes stay small (<= ~26 wide).
  uint64_t prev = 0, cur = 0;
  for (int i = 0; i < nr; ++i) {
    cur = 0;
    for (int j = 0; j < nc; ++j) {
      if (i == 0 && j == 0) {
        cur |= 1;
        continue;
      }
      Cell cell{u.row + i * dr, u.col + j * dc};
      if (cell != v && b.at(cell)) continue;
      const bool from_above = (prev >> j) & 1;
      const bool from_left = j > 0 && ((cur >> (j - 1)) & 1);
      if (from_above || from_left) cur |= (uint64_t{1} << j);
    }
    prev = cur;
  }
  return (prev >> (nc - 1)) & 1;
}

bool all_pairs_visible(const Board& b, const std::vector<Cell>& cells) {
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = i + 1; j < cells.size(); ++j)
      if (!visible_on_board(b, cells[i], cells[j])) return false;
  return true;
}

int set_order_about(const std::vector<Cell>& cells, const Center& ctr) {
  auto sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  auto check = [&](int q) {
    if (q % 2 != 0 && (ctr.row2 % 2) != (ctr.col2 % 2)) return false;
    std::vector<Cell> rot;
    rot.reserve(sorted.size());
    for (const Cell& c : sorted) rot.push_back(rotate_cell(c, ctr, q));
    std::sort(rot.begin(), rot.end());
    return rot == sorted;
  };
  if (check(1)) return 4;
  if (check(2)) return 2;
  return 1;
}

std::string corner_string(const Board& b, int corner) {
  Rect box{1, 1, b.rows, b.cols};
  std::string s;
  s.reserve(static_cast<size_t>(box.area()));
  for (const Cell& c : corner_scan_cells(box, corner)) s.push_back(b.at(c) ? '1' : '0');
  return s;
}

// The guard's final target adjacent to a local box corner, along the first
// row of that corner's own frame.
Cell corner_adjacent_target(int h, int w, int corner) {
  switch (corner) {
    case kCornerTR: return {1, w - 1};
    case kCornerBL: return {h, 2};
    case kCornerTL: return {2, 1};
    case kCornerBR: return {h - 1, w};
  }
  throw DomainError("corner id must be 0..3");
}

// ---- asymmetric pattern search -------------------------------------------

struct AsymSearch {
  int n, k;
  bool strict;  // demand an asymmetric set with a strict max-view corner
  Board board;
  std::vector<Cell> placed;
  std::vector<Cell> solution;

  AsymSearch(int n_, bool strict_) : n(n_), k((n_ + 1) / 2), strict(strict_), board(k, k) {}

  bool place_cells(const std::vector<Cell>& cs) {
    // Column caps plus remaining-capacity bound.
    for (const Cell& c : cs)
      if (board.col_cnt[c.col] + 1 > 2) return false;
    for (const Cell& c : cs) board.add(c);
    // New cells lie below all previously filled rows, so checking the new
    // cells against everything already placed is exact.
    size_t base = placed.size();
    for (const Cell& c : cs) placed.push_back(c);
    for (size_t i = base; i < placed.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        if (!visible_on_board(board, placed[i], placed[j])) {
          unplace(cs, base);
          return false;
        }
    return true;
  }

  void unplace(const std::vector<Cell>& cs, size_t base) {
    placed.resize(base);
    for (const Cell& c : cs) board.remove(c);
  }

  bool capacity_ok(int next_row) {
    // Each remaining row supplies at most one robot per column.
    const int rows_left = k - next_row + 1;
    int need = 0;
    for (int r = next_row; r <= k; ++r) need += (n % 2 == 1 && r == k) ? 1 : 2;
    int cap = 0;
    int overfull = 0;  // columns that can no longer reach a count of 2
    for (int c = 1; c <= k; ++c) {
      const int deficit = 2 - board.col_cnt[c];
      cap += std::min(deficit, rows_left);
      if (deficit > rows_left) overfull += deficit - rows_left;
    }
    if (cap < need) return false;
    // Even n: every column ends at exactly 2. Odd n: exactly one column
    // ends at 1, giving one unit of slack.
    return overfull <= (n % 2);
  }

  bool leaf_ok() {
    if (!strict) return true;
    return set_order_about(placed, Center{1 + k, 1 + k}) == 1;
  }

  bool search(int row) {
    if (row > k) {
      if (!leaf_ok()) return false;
      solution = placed;
      std::sort(solution.begin(), solution.end());
      return true;
    }
    if (!capacity_ok(row)) return false;
    if (row == 1) {
      for (int x = 2; x <= k - 2; ++x) {
        std::vector<Cell> cs{{1, x}, {1, k - 1}};
        if (place_cells(cs)) {
          if (search(2)) return true;
          unplace(cs, placed.size() - cs.size());
        }
      }
      return false;
    }
    const bool last = row == k;
    if (last && n % 2 == 1) {
      for (int a = 2; a <= k - 1; ++a) {
        std::vector<Cell> cs{{row, a}};
        if (place_cells(cs)) {
          if (search(row + 1)) return true;
          unplace(cs, placed.size() - cs.size());
        }
      }
      return false;
    }
    const int lo = last ? 2 : 1;
    const int hi = last ? k - 1 : k;
    for (int a = lo; a <= hi; ++a)
      for (int b = a + 1; b <= hi; ++b) {
        std::vector<Cell> cs{{row, a}, {row, b}};
        if (place_cells(cs)) {
          if (search(row + 1)) return true;
          unplace(cs, placed.size() - cs.size());
        }
      }
    return false;
  }
};

// ---- symmetric pattern search ---------------------------------------------

struct SymBox {
  int h = 0, w = 0;
};

SymBox sym_box(int n, int rho, int tc) {
  const int k = (n + 1) / 2;
  SymBox b;
  switch (tc) {
    case 1:  // vertex center: both dims odd
      b.h = b.w = (k % 2 == 1) ? k : k + 1;
      break;
    case 3:  // tile center: both dims even
      b.h = b.w = (k % 2 == 0) ? k : k + 1;
      break;
    case 2:  // edge midpoint: exactly one even dim
      if (rho == 4) throw DomainError("a 90-degree rotation cannot fix an edge midpoint");
      b.h = k;
      b.w = k + 1;
      break;
    default:
      throw DomainError("tc must be 1, 2 or 3");
  }
  return b;
}

struct SymSearch {
  int n, rho;
  int h, w;
  Center ctr;
  int step;  // quarter-turns of the generating rotation
  Board board;
  std::vector<Cell> placed;
  std::vector<std::vector<Cell>> orbits;  // sorted by representative
  std::vector<Cell> solution;

  SymSearch(int n_, int rho_, SymBox box)
      : n(n_), rho(rho_), h(box.h), w(box.w), ctr{1 + box.h, 1 + box.w},
        step(rho_ == 4 ? 1 : 2), board(box.h, box.w) {}

  std::vector<Cell> orbit_of(const Cell& c) const {
    std::vector<Cell> orb{c};
    Cell x = c;
    for (;;) {
      x = rotate_cell(x, ctr, step);
      if (x == c) break;
      orb.push_back(x);
    }
    std::sort(orb.begin(), orb.end());
    return orb;
  }

  void build_orbits() {
    std::vector<Cell> skip;
    for (const Cell& c : {Cell{1, 1}, Cell{1, w}, Cell{h, 1}, Cell{h, w}}) skip.push_back(c);
    if (h % 2 == 1 && w % 2 == 1) skip.push_back(Cell{(h + 1) / 2, (w + 1) / 2});
    std::sort(skip.begin(), skip.end());
    std::map<Cell, std::vector<Cell>> by_rep;
    for (int r = 1; r <= h; ++r)
      for (int c = 1; c <= w; ++c) {
        Cell cell{r, c};
        if (std::binary_search(skip.begin(), skip.end(), cell)) continue;
        auto orb = orbit_of(cell);
        if (static_cast<int>(orb.size()) != rho) continue;
        bool skips = false;
        for (const Cell& o : orb)
          if (std::binary_search(skip.begin(), skip.end(), o)) skips = true;
        if (skips) continue;
        by_rep.emplace(orb.front(), orb);
      }
    for (auto& [rep, orb] : by_rep) orbits.push_back(orb);
  }

  bool add_orbit(const std::vector<Cell>& orb) {
    std::vector<int> rcnt(h + 1, 0), ccnt(w + 1, 0);
    for (const Cell& c : orb) {
      if (board.at(c)) return false;
      ++rcnt[c.row];
      ++ccnt[c.col];
    }
    for (int r = 1; r <= h; ++r)
      if (board.row_cnt[r] + rcnt[r] > 2) return false;
    for (int c = 1; c <= w; ++c)
      if (board.col_cnt[c] + ccnt[c] > 2) return false;
    for (const Cell& c : orb) {
      board.add(c);
      placed.push_back(c);
    }
    if (!all_pairs_visible(board, placed)) {
      remove_orbit(orb);
      return false;
    }
    return true;
  }

  void remove_orbit(const std::vector<Cell>& orb) {
    placed.resize(placed.size() - orb.size());
    for (const Cell& c : orb) board.remove(c);
  }

  bool tightness_reachable(size_t next) const {
    bool top = board.row_cnt[1] > 0, bottom = board.row_cnt[h] > 0;
    bool left = board.col_cnt[1] > 0, right = board.col_cnt[w] > 0;
    for (size_t i = next; i < orbits.size() && !(top && bottom && left && right); ++i)
      for (const Cell& c : orbits[i]) {
        top = top || c.row == 1;
        bottom = bottom || c.row == h;
        left = left || c.col == 1;
        right = right || c.col == w;
      }
    return top && bottom && left && right;
  }

  bool search(size_t idx, int chosen, int want) {
    if (chosen == want) {
      if (board.row_cnt[1] == 0 || board.row_cnt[h] == 0 || board.col_cnt[1] == 0 ||
          board.col_cnt[w] == 0)
        return false;
      solution = placed;
      std::sort(solution.begin(), solution.end());
      return true;
    }
    if (idx >= orbits.size()) return false;
    if (static_cast<int>(orbits.size() - idx) < want - chosen) return false;
    if (!tightness_reachable(idx)) return false;
    if (add_orbit(orbits[idx])) {
      if (search(idx + 1, chosen + 1, want)) return true;
      remove_orbit(orbits[idx]);
    }
    return search(idx + 1, chosen, want);
  }
};

// ---- cache + validation ----------------------------------------------------

struct PatternKey {
  int n, rho, tc;
  auto operator<=>(const PatternKey&) const = default;
};

std::mutex g_cache_mutex;
std::map<PatternKey, Pattern> g_cache;

Pattern finalize_pattern(int n, int rho_req, int tc_req, int h, int w, std::vector<Cell> cells) {
  Pattern p;
  p.n = n;
  p.box_rows = h;
  p.box_cols = w;
  p.cells = std::move(cells);
  std::sort(p.cells.begin(), p.cells.end());

  Rect box = mbr(std::span<const Cell>(p.cells));
  if (box != Rect{1, 1, h, w}) throw InternalError("pattern mbr is not tight");
  Center ctr{1 + h, 1 + w};
  p.rho_f = set_order_about(p.cells, ctr);
  p.tc_f = tc_req;
  p.max_view_corner = kCornerTR;

  for (int corner = 0; corner < 4; ++corner) {
    Cell t = corner_adjacent_target(h, w, corner);
    if (p.contains(t)) p.guard_target[corner] = t;
  }
  // Only asymmetric embeddings need the corner-adjacent target: the guard
  // finishes in one step there. Symmetric guards walk in from farther away.
  if (rho_req == 1 && !p.guard_target[kCornerTR])
    throw InternalError("pattern lacks the guard target at its designated corner");

  // Every generated or loaded pattern is re-validated.
  Configuration cfg = Configuration::make(GridSpec::make_infinite(), p.cells);
  GmvReport rep = is_gmv(cfg);
  if (!rep.holds) throw InternalError("pattern fails geodesic mutual visibility");
  std::vector<int> row_cnt(h + 1, 0), col_cnt(w + 1, 0);
  for (const Cell& c : p.cells) {
    ++row_cnt[c.row];
    ++col_cnt[c.col];
  }
  for (int r = 1; r <= h; ++r)
    if (row_cnt[r] > 2) throw InternalError("pattern exceeds two targets in a row");
  for (int c = 1; c <= w; ++c)
    if (col_cnt[c] > 2) throw InternalError("pattern exceeds two targets in a column");
  for (const Cell& c : {Cell{1, 1}, Cell{1, w}, Cell{h, 1}, Cell{h, w}})
    if (p.contains(c)) throw InternalError("pattern occupies a box corner");
  if (rho_req > 1) {
    if (p.rho_f % rho_req != 0) throw InternalError("pattern symmetry too low");
    if (center_type(ctr) != tc_req) throw InternalError("pattern center type mismatch");
  } else {
    if (rep.area != min_area(n)) throw InternalError("asymmetric pattern is not minimum area");
  }
  return p;
}

Pattern generate(const PatternKey& key) {
  if (key.n < 7) throw DomainError("patterns require at least 7 robots");
  if (key.rho == 1) {
    // Prefer an asymmetric solution. For n=8 the only corner-free placement
    // in a 4x4 box is the rotationally symmetric ring, so fall back to
    // accepting it: the symmetricity of the target only has to be a
    // multiple of the input's, and a rotational target embeds the same way
    // from every corner.
    AsymSearch s(key.n, true);
    if (s.search(1)) return finalize_pattern(key.n, 1, 0, s.k, s.k, s.solution);
    AsymSearch relaxed(key.n, false);
    if (!relaxed.search(1)) throw InternalError("asymmetric pattern search failed");
    return finalize_pattern(key.n, 1, 0, relaxed.k, relaxed.k, relaxed.solution);
  }
  if (key.rho != 2 && key.rho != 4) throw DomainError("rho must be 1, 2 or 4");
  if (key.rho == 4 && key.n % 4 != 0)
    throw DomainError("rho=4 patterns need a robot count divisible by 4");
  if (key.n % 2 != 0) throw DomainError("rotational patterns need an even robot count");
  SymBox box = sym_box(key.n, key.rho, key.tc);
  SymSearch s(key.n, key.rho, box);
  s.build_orbits();
  const int want = key.n / key.rho;
  if (!s.search(0, 0, want))
    throw DomainError("no rotational pattern exists for this (n, rho, tc)");
  return finalize_pattern(key.n, key.rho, key.tc, box.h, box.w, s.solution);
}

}  // namespace

bool Pattern::contains(const Cell& c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

const Pattern& asym_pattern(int n) {
  PatternKey key{n, 1, 0};
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_cache.find(key);
  if (it == g_cache.end()) it = g_cache.emplace(key, generate(key)).first;
  return it->second;
}

const Pattern& sym_pattern(int n, int rho, int tc) {
  PatternKey key{n, rho, tc};
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_cache.find(key);
  if (it == g_cache.end()) it = g_cache.emplace(key, generate(key)).first;
  return it->second;
}

std::vector<Cell> embed_at_corner(const Pattern& p, const GridSpec& g, int corner) {
  if (!g.finite) throw DomainError("embed_at_corner requires a finite grid");
  Frame f = Frame::for_corner(g, corner);
  if (p.box_rows > f.rows() || p.box_cols > f.cols())
    throw DomainError("pattern box exceeds the grid");
  std::vector<Cell> out;
  out.reserve(p.cells.size());
  const int shift = f.cols() - p.box_cols;
  for (const Cell& c : p.cells) out.push_back(f.to_global({c.row, c.col + shift}));
  std::sort(out.begin(), out.end());
  return out;
}

Cell guard_target_at_corner(const Pattern& p, const GridSpec& g, int corner) {
  Frame f = Frame::for_corner(g, corner);
  if (!p.guard_target[kCornerTR]) throw InternalError("pattern lacks its guard target");
  Cell t = *p.guard_target[kCornerTR];
  const int shift = f.cols() - p.box_cols;
  return f.to_global({t.row, t.col + shift});
}

namespace {

Cell rotate_local(const Cell& c, int h, int w, int quarter_turns) {
  // Rotation about the box center in doubled coordinates; for odd turns the
  // box dims swap and the result is re-based to 1.
  int dr2 = 2 * c.row - (1 + h);
  int dc2 = 2 * c.col - (1 + w);
  quarter_turns = ((quarter_turns % 4) + 4) % 4;
  for (int i = 0; i < quarter_turns; ++i) {
    int t = dr2;
    dr2 = dc2;
    dc2 = -t;
  }
  const int nh = quarter_turns % 2 == 0 ? h : w;
  const int nw = quarter_turns % 2 == 0 ? w : h;
  return Cell{(dr2 + 1 + nh) / 2, (dc2 + 1 + nw) / 2};
}

}  // namespace

std::vector<Cell> embed_centered(const Pattern& p, const GridSpec& g, int quarter_turns) {
  if (!g.finite) throw DomainError("embed_centered requires a finite grid");
  const int h = quarter_turns % 2 == 0 ? p.box_rows : p.box_cols;
  const int w = quarter_turns % 2 == 0 ? p.box_cols : p.box_rows;
  if ((g.rows - h) % 2 != 0 || (g.cols - w) % 2 != 0)
    throw DomainError("pattern and grid center parities disagree");
  if (h > g.rows || w > g.cols) throw DomainError("pattern box exceeds the grid");
  const int dr = (g.rows - h) / 2;
  const int dc = (g.cols - w) / 2;
  std::vector<Cell> out;
  out.reserve(p.cells.size());
  for (const Cell& c : p.cells) {
    Cell r = rotate_local(c, p.box_rows, p.box_cols, quarter_turns);
    out.push_back({r.row + dr, r.col + dc});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Cell> centered_guard_target(const Pattern& p, const GridSpec& g,
                                          int quarter_turns, int corner) {
  // The rotated pattern's guard target at `corner` comes from the source
  // corner that rotation maps onto it.
  const int src = ((corner - quarter_turns) % 4 + 4) % 4;
  if (!p.guard_target[src]) return std::nullopt;
  const int h = quarter_turns % 2 == 0 ? p.box_rows : p.box_cols;
  const int w = quarter_turns % 2 == 0 ? p.box_cols : p.box_rows;
  const int dr = (g.rows - h) / 2;
  const int dc = (g.cols - w) / 2;
  Cell r = rotate_local(*p.guard_target[src], p.box_rows, p.box_cols, quarter_turns);
  return Cell{r.row + dr, r.col + dc};
}

void load_pattern_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string word;
    int n = 0, rho = 0, tc = 0;
    if (!(ss >> word) || word != "pattern") continue;
    char eq;
    std::string field;
    auto read_kv = [&](const std::string& name, int& out) {
      if (!(ss >> field)) return false;
      auto pos = field.find('=');
      if (pos == std::string::npos || field.substr(0, pos) != name) return false;
      out = std::stoi(field.substr(pos + 1));
      return true;
    };
    (void)eq;
    if (!read_kv("n", n) || !read_kv("rho", rho)) continue;
    std::string tcpart;
    if (!(ss >> tcpart)) continue;
    auto pos = tcpart.find('=');
    if (pos == std::string::npos) continue;
    std::string tcval = tcpart.substr(pos + 1);
    if (!tcval.empty() && tcval.back() == ':') tcval.pop_back();
    tc = std::stoi(tcval);
    std::vector<Cell> cells;
    int r, c;
    char ch;
    while (ss >> ch && ch == '(') {
      if (!(ss >> r >> ch >> c >> ch)) break;
      cells.push_back({r, c});
    }
    if (cells.empty()) continue;
    try {
      Rect box = mbr(std::span<const Cell>(cells));
      Pattern p = finalize_pattern(static_cast<int>(cells.size()), rho, tc, box.bottom,
                                   box.right, cells);
      g_cache.insert_or_assign(PatternKey{n, rho, tc}, std::move(p));
    } catch (const std::exception&) {
      // A stale or hand-edited entry is regenerated on demand instead.
    }
  }
}

void save_pattern_cache(const std::string& path) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  std::ofstream out(path);
  for (const auto& [key, p] : g_cache) {
    out << "pattern n=" << key.n << " rho=" << key.rho << " tc=" << key.tc << ":";
    for (const Cell& c : p.cells) out << " (" << c.row << "," << c.col << ")";
    out << "\n";
  }
}

}  // namespace gmv
