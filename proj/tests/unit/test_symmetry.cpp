#include <random>
#include <set>

#include "doctest.h"
#include "gmv/symmetry.hpp"

using namespace gmv;

namespace {

const std::vector<Cell> kRing8 = {{1, 2}, {1, 3}, {2, 1}, {2, 4},
                                  {3, 1}, {3, 4}, {4, 2}, {4, 3}};

Configuration ring_on_4x4() { return Configuration::make(GridSpec::make_finite(4, 4), kRing8); }

}  // namespace

TEST_CASE("published ring string") {
  auto c = ring_on_4x4();
  CHECK(lss(c).lss == "0110100110010110");
  auto info = rotation_group(c);
  CHECK(info.set_order == 4);
  CHECK(info.grid_order == 4);
  CHECK(info.rho == 4);
  CHECK(info.tc == 3);
  CHECK(info.center == Center{5, 5});
}

TEST_CASE("rotation group basics") {
  auto g4 = GridSpec::make_finite(4, 4);
  auto pair = Configuration::make(g4, {{1, 1}, {4, 4}});
  auto info = rotation_group(pair);
  CHECK(info.set_order == 2);
  CHECK(info.grid_order == 2);
  CHECK(info.rho == 2);
  CHECK(info.tc == 3);
  CHECK(info.center == Center{5, 5});

  // Any pair is 180-symmetric about its own midpoint, but that midpoint is
  // not the grid center here, so the configuration-on-grid is asymmetric.
  auto asym = Configuration::make(g4, {{1, 1}, {2, 3}});
  CHECK(rotation_group(asym).set_order == 2);
  CHECK(rotation_group(asym).grid_order == 1);
  CHECK(rotation_group(asym).rho == 1);
}

TEST_CASE("center types and vertex demotion") {
  auto g5 = GridSpec::make_finite(5, 5);
  // 180-degree pair about the vertex center (3,3), center occupied.
  auto c = Configuration::make(g5, {{2, 2}, {3, 3}, {4, 4}});
  auto info = rotation_group(c);
  CHECK(info.grid_order == 2);
  CHECK(info.tc == 1);
  CHECK(info.rho == 1);

  // Same pair without the center robot keeps rho = 2.
  auto c2 = Configuration::make(g5, {{2, 2}, {4, 4}});
  CHECK(rotation_group(c2).rho == 2);
}

TEST_CASE("off-center set symmetry is not grid symmetry") {
  auto g = GridSpec::make_finite(6, 6);
  auto c = Configuration::make(g, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  auto info = rotation_group(c);
  CHECK(info.set_order == 4);
  CHECK(info.grid_order == 1);
  CHECK(info.rho == 1);
}

TEST_CASE("lss singleton and candidates") {
  auto c = Configuration::make(GridSpec::make_infinite(), {{2, 2}});
  auto r = lss(c);
  CHECK(r.lss == "1");
  CHECK(r.candidates.size() == 4);
}

TEST_CASE("opposite corner equality detects rotational sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Cell> cells;
    int n = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i)
      cells.push_back({static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    auto c = Configuration::make(GridSpec::make_infinite(), cells);
    auto scans = lss(c);
    auto info = rotation_group(c);
    std::string tl, br;
    bool have_tl = false, have_br = false;
    for (const auto& cand : scans.candidates) {
      if (cand.corner == kCornerTL) { tl = cand.bits; have_tl = true; }
      if (cand.corner == kCornerBR) { br = cand.bits; have_br = true; }
    }
    if (have_tl && have_br) CHECK((tl == br) == (info.set_order >= 2));
  }
}

TEST_CASE("lss is rotation invariant") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Cell> cells;
    int n = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i)
      cells.push_back({static_cast<int>(rng() % 6), static_cast<int>(rng() % 6)});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    auto c = Configuration::make(GridSpec::make_infinite(), cells);
    std::string base = lss(c).lss;
    Center origin{0, 0};
    for (int turn = 1; turn < 4; ++turn) {
      std::vector<Cell> rot;
      for (const Cell& x : c.robots) rot.push_back(rotate_cell(x, origin, turn));
      auto rc = Configuration::make(GridSpec::make_infinite(), rot);
      CHECK(lss(rc).lss == base);
    }
  }
}

TEST_CASE("view ranks") {
  auto solo = Configuration::make(GridSpec::make_infinite(), {{2, 2}});
  auto r = view_rank(solo);
  CHECK(r.at({2, 2}) == 0);

  // Derived by evaluating the four corner scans of the 2x2 box by hand:
  // the winning string is 0111 from the bottom-left corner, whose first
  // robot is (1,1).
  auto tri = Configuration::make(GridSpec::make_finite(5, 5), {{1, 1}, {1, 2}, {2, 2}});
  CHECK(lss(tri).lss == "0111");
  auto vr = view_rank(tri);
  CHECK(vr.at({1, 1}) == 0);
  CHECK(vr.at({2, 2}) == 1);
  CHECK(vr.at({1, 2}) == 2);

  // All members of each 90-degree orbit share a rank.
  auto ring = ring_on_4x4();
  auto rr = view_rank(ring);
  Center ctr{5, 5};
  for (const Cell& x : ring.robots) {
    CHECK(rr.at(x) == rr.at(rotate_cell(x, ctr, 1)));
  }
}

TEST_CASE("asymmetric sets have strict view order") {
  std::mt19937_64 rng(9);
  int checked = 0;
  while (checked < 200) {
    std::vector<Cell> cells;
    for (int i = 0; i < 6; ++i)
      cells.push_back({static_cast<int>(rng() % 7), static_cast<int>(rng() % 7)});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.size() < 2) continue;
    auto c = Configuration::make(GridSpec::make_infinite(), cells);
    if (rotation_group(c).set_order != 1) continue;
    ++checked;
    auto vr = view_rank(c);
    std::set<int> ranks;
    for (const auto& [cell, rank] : vr) ranks.insert(rank);
    CHECK(ranks.size() == vr.size());
  }
}

TEST_CASE("rho divides orbit sizes") {
  auto ring = ring_on_4x4();
  auto info = rotation_group(ring);
  std::set<Cell> seen;
  for (const Cell& r : ring.robots) {
    if (seen.count(r)) continue;
    std::vector<Cell> orb{r};
    Cell x = r;
    for (;;) {
      x = rotate_cell(x, info.center, 1);
      if (x == r) break;
      orb.push_back(x);
    }
    for (const Cell& o : orb) seen.insert(o);
    CHECK(orb.size() % info.rho == 0);
  }
}

namespace {

// Oracle: try all four rotations about every doubled-coordinate center in
// range and report the best order that maps the set to itself.
int oracle_set_order(const Configuration& c) {
  Rect box = mbr(c);
  int best = 1;
  for (int r2 = 2 * box.top; r2 <= 2 * box.bottom; ++r2) {
    for (int c2 = 2 * box.left; c2 <= 2 * box.right; ++c2) {
      Center ctr{r2, c2};
      for (int turn : {1, 2}) {
        if (turn == 1 && (r2 % 2) != (c2 % 2)) continue;
        std::vector<Cell> rot;
        bool ok = true;
        for (const Cell& x : c.robots) {
          Cell y = rotate_cell(x, ctr, turn);
          rot.push_back(y);
        }
        std::sort(rot.begin(), rot.end());
        if (ok && rot == c.robots) best = std::max(best, turn == 1 ? 4 : 2);
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("rotation group agrees with the exhaustive oracle") {
  // All pairs and triples on a 4x4 box, then random larger samples on 5x5.
  std::vector<Cell> cells;
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) cells.push_back({r, c});
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = i + 1; j < cells.size(); ++j) {
      auto c = Configuration::make(GridSpec::make_infinite(), {cells[i], cells[j]});
      CHECK(rotation_group(c).set_order == oracle_set_order(c));
    }
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Cell> chosen;
    int n = 3 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i)
      chosen.push_back({1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5)});
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    auto c = Configuration::make(GridSpec::make_infinite(), chosen);
    CHECK(rotation_group(c).set_order == oracle_set_order(c));
  }
}
