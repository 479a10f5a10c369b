#include <random>

#include "doctest.h"
#include "gmv/visibility.hpp"

using namespace gmv;

namespace {

Configuration inf_config(std::vector<Cell> cells) {
  return Configuration::make(GridSpec::make_infinite(), std::move(cells));
}

// Independent oracle: explicit enumeration of every monotone lattice path.
bool enumerate_visible(const Configuration& c, const Cell& u, const Cell& v) {
  const int dr = v.row >= u.row ? 1 : -1;
  const int dc = v.col >= u.col ? 1 : -1;
  const int nr = std::abs(v.row - u.row);
  const int nc = std::abs(v.col - u.col);
  // Walk all interleavings of nr row steps and nc column steps.
  std::vector<int> steps(nr + nc, 0);
  for (int i = 0; i < nc; ++i) steps[nr + i] = 1;
  std::sort(steps.begin(), steps.end());
  do {
    Cell cur = u;
    bool clear = true;
    for (size_t i = 0; i + 1 < steps.size() + 1 && clear; ++i) {
      if (i == steps.size()) break;
      cur = steps[i] == 0 ? Cell{cur.row + dr, cur.col} : Cell{cur.row, cur.col + dc};
      if (cur != v && c.occupied(cur)) clear = false;
    }
    if (clear) return true;
  } while (std::next_permutation(steps.begin(), steps.end()));
  return false;
}

}  // namespace

TEST_CASE("geodesic visibility basics") {
  auto a = inf_config({{1, 1}, {1, 3}});
  CHECK(geodesic_visible(a, {1, 1}, {1, 3}));

  auto b = inf_config({{1, 1}, {1, 2}, {1, 3}});
  CHECK_FALSE(geodesic_visible(b, {1, 1}, {1, 3}));

  // Both geodesics from (2,2) to (3,3) pass occupied vertices.
  auto c = inf_config({{2, 2}, {2, 3}, {3, 2}, {3, 3}});
  CHECK(enumerate_visible(c, {2, 2}, {3, 3}) == false);
  CHECK_FALSE(geodesic_visible(c, {2, 2}, {3, 3}));

  CHECK_THROWS_AS(geodesic_visible(a, {1, 1}, {9, 9}), DomainError);
  CHECK_THROWS_AS(geodesic_visible(a, {1, 1}, {1, 1}), DomainError);
}

TEST_CASE("geodesic visibility is symmetric and adjacent cells always see") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Cell> cells;
    int n = 2 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i)
      cells.push_back({static_cast<int>(rng() % 6), static_cast<int>(rng() % 6)});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.size() < 2) continue;
    auto c = inf_config(cells);
    for (size_t i = 0; i < c.robots.size(); ++i)
      for (size_t j = i + 1; j < c.robots.size(); ++j) {
        bool uv = geodesic_visible(c, c.robots[i], c.robots[j]);
        bool vu = geodesic_visible(c, c.robots[j], c.robots[i]);
        CHECK(uv == vu);
        if (manhattan(c.robots[i], c.robots[j]) == 1) CHECK(uv);
      }
  }
}

TEST_CASE("dp matches path enumeration") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 800; ++trial) {
    std::vector<Cell> cells;
    int n = 2 + static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i)
      cells.push_back({static_cast<int>(rng() % 6), static_cast<int>(rng() % 6)});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.size() < 2) continue;
    auto c = inf_config(cells);
    for (size_t i = 0; i < c.robots.size(); ++i)
      for (size_t j = i + 1; j < c.robots.size(); ++j)
        CHECK(geodesic_visible(c, c.robots[i], c.robots[j]) ==
              enumerate_visible(c, c.robots[i], c.robots[j]));
  }
}

TEST_CASE("is_gmv") {
  auto diag = inf_config({{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
  CHECK(is_gmv(diag).holds);

  auto blocked = inf_config({{1, 1}, {1, 2}, {1, 3}});
  auto rep = is_gmv(blocked);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.first_violating_pair.has_value());
  CHECK(rep.first_violating_pair->first == Cell{1, 1});
  CHECK(rep.first_violating_pair->second == Cell{1, 3});

  auto row_gap = inf_config({{1, 1}, {1, 3}});
  CHECK(is_gmv(row_gap).holds);

  auto degenerate = inf_config({{4, 4}});
  CHECK(is_gmv(degenerate).holds);
  CHECK(is_gmv(degenerate).degenerate);
}

TEST_CASE("colinear triples with a blocking middle fail") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int row = static_cast<int>(rng() % 5);
    int a = static_cast<int>(rng() % 10);
    int b = a + 2 + static_cast<int>(rng() % 5);
    int mid = a + 1 + static_cast<int>(rng() % (b - a - 1));
    auto c = inf_config({{row, a}, {row, mid}, {row, b}});
    CHECK_FALSE(is_gmv(c).holds);
  }
}

TEST_CASE("mu formula") {
  CHECK(mu_grid(4, 4) == 8);
  CHECK(mu_grid(5, 9) == 10);
  CHECK(mu_grid(100, 4) == 8);
  CHECK_THROWS_AS(mu_grid(3, 9), DomainError);
  CHECK_THROWS_AS(mu_grid(9, 2), DomainError);
}

TEST_CASE("min area certification") {
  // A diagonal of 8 robots holds GMV but wastes area.
  std::vector<Cell> diag;
  for (int i = 1; i <= 8; ++i) diag.push_back({i, i});
  auto sparse = inf_config(diag);
  CHECK(is_gmv(sparse).holds);
  CHECK_FALSE(certify_min_area(sparse));

  CHECK(min_area(8) == 16);
  CHECK(min_area(7) == 16);
  CHECK(min_area(12) == 36);

  auto bad = inf_config({{1, 1}, {1, 2}, {1, 3}});
  CHECK_THROWS_AS(certify_min_area(bad), DomainError);
}
