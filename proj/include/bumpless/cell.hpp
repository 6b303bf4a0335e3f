#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bumpless {

// (row, col), 1-based, row 1 at the top.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// A weak composition of length n: row or column weights.
using WeightVector = std::vector<int>;

std::string to_string(const WeightVector& v);

}  // namespace bumpless
