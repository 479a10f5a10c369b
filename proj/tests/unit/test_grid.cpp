#include <random>

#include "doctest.h"
#include "gmv/grid.hpp"

using namespace gmv;

TEST_CASE("manhattan distance") {
  CHECK(manhattan({1, 1}, {1, 1}) == 0);
  CHECK(manhattan({1, 1}, {3, 4}) == 5);
  CHECK(manhattan({2, 5}, {7, 1}) == 9);
}

TEST_CASE("manhattan is a metric") {
  std::mt19937_64 rng(1);
  auto cell = [&]() { return Cell{static_cast<int>(rng() % 20), static_cast<int>(rng() % 20)}; };
  for (int i = 0; i < 2000; ++i) {
    Cell a = cell(), b = cell(), c = cell();
    CHECK(manhattan(a, b) == manhattan(b, a));
    CHECK(manhattan(a, c) <= manhattan(a, b) + manhattan(b, c));
    CHECK((manhattan(a, b) == 0) == (a == b));
  }
}

TEST_CASE("total distance") {
  auto g = GridSpec::make_infinite();
  auto solo = Configuration::make(g, {{1, 1}});
  CHECK(total_distance(solo, {1, 1}) == 0);
  auto c = Configuration::make(g, {{1, 1}, {1, 2}, {1, 4}});
  CHECK(total_distance(c, {1, 4}) == 5);
  CHECK(total_distance(c, {1, 1}) == 4);
  CHECK(total_distance(c, {1, 2}) == 3);
  CHECK_THROWS_AS(total_distance(c, {2, 2}), DomainError);
}

TEST_CASE("mbr") {
  auto g = GridSpec::make_infinite();
  CHECK(mbr(Configuration::make(g, {{2, 2}})) == Rect{2, 2, 2, 2});
  CHECK(mbr(Configuration::make(g, {{1, 1}, {3, 4}})) == Rect{1, 1, 3, 4});
  CHECK(mbr(Configuration::make(g, {{2, 3}, {4, 3}, {3, 1}})) == Rect{2, 1, 4, 3});
  std::vector<Cell> none;
  CHECK_THROWS_AS(mbr(std::span<const Cell>(none)), DomainError);
}

TEST_CASE("mbr is tight") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Cell> cells;
    int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i)
      cells.push_back({static_cast<int>(rng() % 10), static_cast<int>(rng() % 10)});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    Rect r = mbr(std::span<const Cell>(cells));
    bool top = false, bottom = false, left = false, right = false;
    for (const Cell& c : cells) {
      top |= c.row == r.top;
      bottom |= c.row == r.bottom;
      left |= c.col == r.left;
      right |= c.col == r.right;
    }
    CHECK(top);
    CHECK(bottom);
    CHECK(left);
    CHECK(right);
  }
}

TEST_CASE("perimeter stats") {
  auto g5 = GridSpec::make_finite(5, 5);
  auto inner = Configuration::make(g5, {{2, 2}, {3, 4}, {4, 3}});
  auto s0 = perimeter_stats(inner);
  CHECK(s0.on_sides == 0);
  CHECK(s0.on_corners == 0);

  auto one = Configuration::make(g5, {{1, 3}, {2, 2}});
  auto s1 = perimeter_stats(one);
  CHECK(s1.on_sides == 1);
  CHECK(s1.on_corners == 0);

  auto g4 = GridSpec::make_finite(4, 4);
  auto two = Configuration::make(g4, {{1, 1}, {4, 4}, {2, 2}});
  auto s2 = perimeter_stats(two);
  CHECK(s2.on_sides == 2);
  CHECK(s2.on_corners == 2);

  auto inf = Configuration::make(GridSpec::make_infinite(), {{1, 1}});
  CHECK_THROWS_AS(perimeter_stats(inf), DomainError);
}

TEST_CASE("perimeter stats bounds") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int M = 4 + static_cast<int>(rng() % 5), N = 4 + static_cast<int>(rng() % 5);
    std::vector<Cell> cells;
    for (int i = 0; i < 6; ++i)
      cells.push_back({1 + static_cast<int>(rng() % M), 1 + static_cast<int>(rng() % N)});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    auto s = perimeter_stats(Configuration::make(GridSpec::make_finite(M, N), cells));
    CHECK(s.on_corners <= 4);
    CHECK(s.on_corners <= s.on_sides);
  }
}

TEST_CASE("corner frames round trip") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    int M = 2 + static_cast<int>(rng() % 9), N = 2 + static_cast<int>(rng() % 9);
    auto g = GridSpec::make_finite(M, N);
    auto corners = g.corners();
    for (int id = 0; id < 4; ++id) {
      Frame f = Frame::for_corner(g, id);
      CHECK(f.to_canonical(corners[id]) == Cell{1, f.cols()});
      for (int i = 0; i < 20; ++i) {
        Cell c{1 + static_cast<int>(rng() % M), 1 + static_cast<int>(rng() % N)};
        CHECK(f.to_global(f.to_canonical(c)) == c);
      }
    }
  }
}

TEST_CASE("configuration validation") {
  auto g = GridSpec::make_finite(3, 3);
  CHECK_THROWS_AS(Configuration::make(g, {{1, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(Configuration::make(g, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(Configuration::make(g, {{4, 1}}), DomainError);
  auto inf = GridSpec::make_infinite();
  CHECK_NOTHROW(Configuration::make(inf, {{-5, 100}}));
}
