#pragma once

#include <iosfwd>
#include <string>

#include "gmv/grid.hpp"

namespace gmv {

struct ParseError : std::runtime_error {
  int line = 0;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// ConfigFile format:
//   grid finite <rows> <cols>   |   grid infinite
//   <row> <col>                 one robot per line
//   # comment
Configuration parse_config(std::istream& in);
Configuration parse_config_file(const std::string& path);
std::string config_to_string(const Configuration& c);

}  // namespace gmv
