#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bumpless/cell.hpp"
#include "bumpless/perm.hpp"

namespace bumpless {

// A finite set of cells inside the n x n grid.
struct Diagram {
  int n = 0;
  std::set<Cell> cells;

  bool contains(Cell c) const { return cells.contains(c); }
  WeightVector row_weights() const;
  WeightVector col_weights() const;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct SnowResult {
  Diagram base;
  std::vector<Cell> dark;    // scan order: bottom row first
  std::set<Cell> snow_cells;  // the added stars
  Diagram combined;           // base plus snow_cells
};

Diagram rothe_diagram(const Permutation& w);

// Rows are scanned bottom to top; each row contributes its rightmost cell whose
// column does not yet hold a dark cell.
std::vector<Cell> dark_clouds(const Diagram& d);

// first: fill strictly above each dark cell; second: fill strictly to its left.
std::pair<SnowResult, SnowResult> snow_diagrams(const Diagram& d);

// (rajcode(w), rajcode(w^-1)) read off the two snow diagrams of Rothe(w).
std::pair<WeightVector, WeightVector> rajcode_pair(const Permutation& w);

// Pipe label -> number of snow stars in that pipe's starting row. Every pipe
// 1..n has an entry.
std::map<int, int> stars_per_pipe(const Permutation& w);

// True when Rothe(w) is a top-left justified Young diagram.
bool is_dominant(const Permutation& w);

}  // namespace bumpless
