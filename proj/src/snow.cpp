#include "bumpless/snow.hpp"

namespace bumpless {

std::string to_string(const WeightVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

WeightVector Diagram::row_weights() const {
  WeightVector out(static_cast<std::size_t>(n), 0);
  for (const Cell& c : cells) ++out[c.row - 1];
  return out;
}

WeightVector Diagram::col_weights() const {
  WeightVector out(static_cast<std::size_t>(n), 0);
  for (const Cell& c : cells) ++out[c.col - 1];
  return out;
}

Diagram rothe_diagram(const Permutation& w) {
  Diagram d{w.size(), {}};
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) d.cells.insert({i, w(j)});
    }
  }
  return d;
}

std::vector<Cell> dark_clouds(const Diagram& d) {
  std::vector<Cell> dark;
  std::vector<bool> column_taken(static_cast<std::size_t>(d.n) + 1, false);
  for (int r = d.n; r >= 1; --r) {
    for (int c = d.n; c >= 1; --c) {
      if (d.contains({r, c}) && !column_taken[c]) {
        dark.push_back({r, c});
        column_taken[c] = true;
        break;
      }
    }
  }
  return dark;
}

std::pair<SnowResult, SnowResult> snow_diagrams(const Diagram& d) {
  const std::vector<Cell> dark = dark_clouds(d);
  SnowResult up{d, dark, {}, d};
  SnowResult left{d, dark, {}, d};
  for (const Cell& cloud : dark) {
    for (int r = 1; r < cloud.row; ++r) {
      if (!d.contains({r, cloud.col})) up.snow_cells.insert({r, cloud.col});
    }
    for (int c = 1; c < cloud.col; ++c) {
      if (!d.contains({cloud.row, c})) left.snow_cells.insert({cloud.row, c});
    }
  }
  up.combined.cells.insert(up.snow_cells.begin(), up.snow_cells.end());
  left.combined.cells.insert(left.snow_cells.begin(), left.snow_cells.end());
  return {std::move(up), std::move(left)};
}

std::pair<WeightVector, WeightVector> rajcode_pair(const Permutation& w) {
  const auto [up, left] = snow_diagrams(rothe_diagram(w));
  return {up.combined.row_weights(), left.combined.col_weights()};
}

std::map<int, int> stars_per_pipe(const Permutation& w) {
  std::map<int, int> out;
  for (int p = 1; p <= w.size(); ++p) out[p] = 0;
  const auto snow = snow_diagrams(rothe_diagram(w)).first;
  for (const Cell& star : snow.snow_cells) ++out[w(star.row)];
  return out;
}

bool is_dominant(const Permutation& w) {
  const Diagram d = rothe_diagram(w);
  for (const Cell& c : d.cells) {
    if (c.row > 1 && !d.contains({c.row - 1, c.col})) return false;
    if (c.col > 1 && !d.contains({c.row, c.col - 1})) return false;
  }
  return true;
}

}  // namespace bumpless
