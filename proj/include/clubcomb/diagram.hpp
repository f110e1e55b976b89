#pragma once

// ASCII dot-and-line pictures of finite functions. Domain dots sit in the
// left column and codomain dots in the right column, both numbered from the
// top, two text rows apart. Each domain dot sends one line rightwards that
// runs horizontally and then climbs or descends diagonally into its image:
//
//   2->1:[1,1]     2->2:[2,1]
//   o----o         o--\ o
//       /              X
//   o--/           o--/ o

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "clubcomb/finord.hpp"

namespace clubcomb {

inline std::string render_diagram(const FinFun& f) {
  const std::size_t rows_needed = std::max(f.dom(), f.cod());
  if (rows_needed == 0) return "";
  const std::size_t height = 2 * rows_needed - 1;

  std::size_t max_drop = 0;
  for (std::size_t j = 1; j <= f.dom(); ++j) {
    const std::size_t from = 2 * (j - 1);
    const std::size_t to = 2 * (f(j) - 1);
    max_drop = std::max(max_drop, from > to ? from - to : to - from);
  }
  const std::size_t middle = max_drop + 2;
  const std::size_t right = middle + 1;

  std::vector<std::string> grid(height, std::string(right + 1, ' '));
  auto put = [&](std::size_t row, std::size_t col, char c) {
    char& cell = grid[row][col];
    if (cell == ' ' || cell == c) {
      cell = c;
    } else if (cell == 'X' || (cell == '/' && c == '\\') || (cell == '\\' && c == '/')) {
      cell = 'X';
    } else {
      cell = '+';
    }
  };

  for (std::size_t j = 1; j <= f.dom(); ++j) grid[2 * (j - 1)][0] = 'o';
  for (std::size_t k = 1; k <= f.cod(); ++k) grid[2 * (k - 1)][right] = 'o';

  for (std::size_t j = 1; j <= f.dom(); ++j) {
    const std::size_t from = 2 * (j - 1);
    const std::size_t to = 2 * (f(j) - 1);
    const std::size_t drop = from > to ? from - to : to - from;
    for (std::size_t col = 1; col <= middle - drop; ++col) put(from, col, '-');
    for (std::size_t k = 1; k <= drop; ++k) {
      const std::size_t col = middle - drop + k;
      if (to > from) {
        put(from + (k - 1), col, '\\');
      } else {
        put(from - (k - 1), col, '/');
      }
    }
  }

  std::string out;
  for (std::string& line : grid) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace clubcomb
