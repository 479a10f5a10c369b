#include "gmv/config_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace gmv {

Configuration parse_config(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<GridSpec> grid;
  std::vector<Cell> robots;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == '#') continue;
    if (first == "grid") {
      if (grid) throw ParseError(lineno, "duplicate grid header");
      std::string kind;
      if (!(ss >> kind)) throw ParseError(lineno, "missing grid kind");
      if (kind == "finite") {
        int rows, cols;
        if (!(ss >> rows >> cols)) throw ParseError(lineno, "grid finite needs <rows> <cols>");
        if (rows < 1 || cols < 1) throw ParseError(lineno, "grid dimensions must be positive");
        grid = GridSpec::make_finite(rows, cols);
      } else if (kind == "infinite") {
        grid = GridSpec::make_infinite();
      } else {
        throw ParseError(lineno, "grid kind must be finite or infinite");
      }
      continue;
    }
    if (!grid) throw ParseError(lineno, "robot line before the grid header");
    int row, col;
    std::istringstream cell(line);
    if (!(cell >> row >> col)) throw ParseError(lineno, "robot line needs <row> <col>");
    std::string extra;
    if (cell >> extra && extra[0] != '#') throw ParseError(lineno, "trailing tokens");
    robots.push_back({row, col});
  }
  if (!grid) throw ParseError(lineno, "missing grid header");
  try {
    return Configuration::make(*grid, std::move(robots));
  } catch (const DomainError& e) {
    throw ParseError(lineno, e.what());
  }
}

Configuration parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_config(in);
}

std::string config_to_string(const Configuration& c) {
  std::ostringstream out;
  if (c.grid.finite) out << "grid finite " << c.grid.rows << " " << c.grid.cols << "\n";
  else out << "grid infinite\n";
  for (const Cell& r : c.robots) out << r.row << " " << r.col << "\n";
  return out.str();
}

}  // namespace gmv
