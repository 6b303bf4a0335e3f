#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bumpless/grid.hpp"
#include "bumpless/perm.hpp"
#include "bumpless/poly.hpp"

namespace fixtures {

using bumpless::Cell;
using bumpless::PipeStep;
using bumpless::TileGrid;

// Route of pipe `label` rising from the bottom edge of its column and turning
// at `turns`, alternately north-to-east and east-to-north, then leaving east.
inline std::vector<PipeStep> staircase_route(int n, int label, const std::vector<Cell>& turns) {
  std::vector<PipeStep> route;
  Cell at{n, label};
  bool north = true;
  for (std::size_t k = 0; k <= turns.size(); ++k) {
    const bool last = k == turns.size();
    const Cell stop = last ? Cell{at.row, n} : turns[k];
    while (at != stop) {
      route.push_back({at, north ? bumpless::kStrandV : bumpless::kStrandH});
      north ? --at.row : ++at.col;
    }
    if (last) {
      route.push_back({at, north ? bumpless::kStrandR : bumpless::kStrandH});
      break;
    }
    route.push_back({at, north ? bumpless::kStrandR : bumpless::kStrandJ});
    if (north && at.col == n) break;
    north ? ++at.col : --at.row;
    north = !north;
  }
  return route;
}

// Superimposes staircase routes for pipes 1..n; every J becomes M when
// `mark_all` is set, otherwise only the cells in `marks`.
inline TileGrid grid_from_staircases(int n, const std::vector<std::vector<Cell>>& turns,
                                     bool mark_all, const std::set<Cell>& marks = {}) {
  std::vector<std::vector<PipeStep>> routes;
  for (int p = 1; p <= n; ++p) routes.push_back(staircase_route(n, p, turns[p - 1]));
  auto grid = bumpless::grid_from_routes(n, routes, mark_all);
  if (!grid) throw std::runtime_error("fixture routes collide");
  for (const Cell& c : marks) grid->set(c, bumpless::Tile::marked);
  return *grid;
}

// Polyline vertices drawn in figure coordinates, where a cell centre sits at
// ((col - 1) * unit + offset, (n - row) * unit + offset). Endpoints on the
// border are dropped; only interior vertices (the turns) are kept.
inline std::vector<Cell> turns_from_figure(int n, double unit, double offset,
                                           const std::vector<std::pair<double, double>>& pts) {
  std::vector<Cell> cells;
  for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
    const int col = static_cast<int>(std::lround((pts[k].first - offset) / unit)) + 1;
    const int row = n - static_cast<int>(std::lround((pts[k].second - offset) / unit));
    cells.push_back({row, col});
  }
  return cells;
}

inline std::set<Cell> cells(std::initializer_list<std::pair<int, int>> list) {
  std::set<Cell> out;
  for (const auto& [r, c] : list) out.insert({r, c});
  return out;
}

// Rajcode by longest increasing subsequences: entry k is (n - k + 1) minus
// the length of the longest increasing subsequence of w(k) w(k+1) ... w(n)
// that starts at w(k).
inline bumpless::WeightVector rajcode_by_lis(const bumpless::Permutation& w) {
  const int n = w.size();
  std::vector<int> best(static_cast<std::size_t>(n) + 1, 1);
  bumpless::WeightVector code(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    for (int j = k + 1; j <= n; ++j) {
      if (w(j) > w(k)) best[k] = std::max(best[k], best[j] + 1);
    }
    code[k - 1] = (n - k + 1) - best[k];
  }
  return code;
}

// Naive expansion of a product of linear forms, each given as a list of
// (coefficient, monomial) terms, by enumerating every choice of one term per
// factor.
using Term = std::pair<int, bumpless::Monomial>;
inline bumpless::Polynomial expand_product(int n, const std::vector<std::vector<Term>>& factors) {
  bumpless::Polynomial sum(n);
  std::vector<std::size_t> pick(factors.size(), 0);
  while (true) {
    bumpless::Integer coeff = 1;
    bumpless::Monomial m = bumpless::Monomial::one(n);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      coeff *= factors[f][pick[f]].first;
      m = m * factors[f][pick[f]].second;
    }
    sum += bumpless::Polynomial::monomial(m, coeff);
    std::size_t f = 0;
    while (f < factors.size() && ++pick[f] == factors[f].size()) pick[f++] = 0;
    if (f == factors.size()) break;
  }
  return sum;
}

// x_i + y_j - x_i y_j as raw terms.
inline std::vector<Term> xy_factor(int n, int i, int j) {
  using bumpless::Monomial;
  return {{1, Monomial::x(n, i)}, {1, Monomial::y(n, j)}, {-1, Monomial::x(n, i) * Monomial::y(n, j)}};
}

// Example diagrams of 251634, drawn with unit cells.
inline TileGrid p1_251634() {
  constexpr int n = 6;
  return grid_from_staircases(n,
                              {turns_from_figure(n, 1, 0.5, {{0.5, 0}, {0.5, 3.5}, {6, 3.5}}),
                               turns_from_figure(n, 1, 0.5, {{1.5, 0}, {1.5, 5.5}, {6, 5.5}}),
                               turns_from_figure(n, 1, 0.5, {{2.5, 0}, {2.5, 1.5}, {6, 1.5}}),
                               turns_from_figure(n, 1, 0.5, {{3.5, 0}, {3.5, 0.5}, {6, 0.5}}),
                               turns_from_figure(n, 1, 0.5, {{4.5, 0}, {4.5, 4.5}, {6, 4.5}}),
                               turns_from_figure(n, 1, 0.5, {{5.5, 0}, {5.5, 2.5}, {6, 2.5}})},
                              false);
}

inline TileGrid p2_251634() {
  constexpr int n = 6;
  return grid_from_staircases(
      n,
      {turns_from_figure(n, 1, 0.5, {{0.5, 0}, {0.5, 2.5}, {3.5, 2.5}, {3.5, 5.5}, {6, 5.5}}),
       turns_from_figure(n, 1, 0.5, {{1.5, 0}, {1.5, 3.5}, {6, 3.5}}),
       turns_from_figure(n, 1, 0.5, {{2.5, 0}, {2.5, 1.5}, {6, 1.5}}),
       turns_from_figure(n, 1, 0.5, {{3.5, 0}, {3.5, 0.5}, {6, 0.5}}),
       turns_from_figure(n, 1, 0.5, {{4.5, 0}, {4.5, 4.5}, {6, 4.5}}),
       turns_from_figure(n, 1, 0.5, {{5.5, 0}, {5.5, 2.5}, {6, 2.5}})},
      false, cells({{4, 4}}));
}

// Final frame of the 5241736 run, 4 mm cells with centres at 2 mod 4.
inline TileGrid dhat_5241736() {
  constexpr int n = 7;
  return grid_from_staircases(n,
                              {{{5, 1}, {5, 3}, {4, 3}},
                               {{4, 2}, {4, 3}, {3, 3}, {3, 4}, {2, 4}},
                               {{6, 3}},
                               {{5, 4}, {5, 6}, {3, 6}},
                               {{3, 5}, {3, 6}, {1, 6}},
                               {{7, 6}},
                               {{5, 7}}},
                              true);
}

inline bumpless::Permutation big12() {
  return bumpless::Permutation::from_images({6, 1, 4, 3, 12, 11, 10, 9, 2, 8, 5, 7});
}

// Final frame of the n = 12 run, 4 mm cells.
inline TileGrid dhat_big12() {
  constexpr int n = 12;
  using P = std::vector<std::pair<double, double>>;
  const std::vector<P> lines = {
      {{2, 0}, {2, 14}, {6, 14}, {6, 18}, {10, 18}, {10, 22}, {14, 22}, {14, 26}, {18, 26},
       {18, 30}, {22, 30}, {22, 34}, {26, 34}, {26, 38}, {30, 38}, {30, 42}, {48, 42}},
      {{6, 0}, {6, 10}, {18, 10}, {18, 14}, {48, 14}},
      {{10, 0}, {10, 14}, {18, 14}, {18, 18}, {22, 18}, {22, 22}, {26, 22}, {26, 26}, {30, 26},
       {30, 30}, {34, 30}, {34, 34}, {48, 34}},
      {{14, 0}, {14, 18}, {18, 18}, {18, 22}, {22, 22}, {22, 26}, {26, 26}, {26, 30}, {30, 30},
       {30, 34}, {34, 34}, {34, 38}, {48, 38}},
      {{18, 0}, {18, 6}, {48, 6}},
      {{22, 0}, {22, 10}, {26, 10}, {26, 18}, {30, 18}, {30, 22}, {34, 22}, {34, 26}, {38, 26},
       {38, 30}, {42, 30}, {42, 46}, {48, 46}},
      {{26, 0}, {26, 2}, {48, 2}},
      {{30, 0}, {30, 10}, {48, 10}},
      {{34, 0}, {34, 18}, {48, 18}},
      {{38, 0}, {38, 22}, {48, 22}},
      {{42, 0}, {42, 26}, {48, 26}},
      {{46, 0}, {46, 30}, {48, 30}},
  };
  std::vector<std::vector<Cell>> turns;
  for (const P& line : lines) turns.push_back(turns_from_figure(n, 4, 2, line));
  return grid_from_staircases(n, turns, true);
}

// The dots of that frame.
inline std::set<Cell> big12_marks() {
  const std::vector<std::pair<double, double>> dots = {
      {6, 14},  {10, 18}, {14, 22}, {18, 26}, {22, 30}, {26, 34}, {30, 38}, {18, 10}, {22, 18},
      {26, 22}, {30, 26}, {34, 30}, {26, 10}, {30, 18}, {34, 22}, {38, 26}, {42, 30}};
  std::set<Cell> out;
  for (const auto& [x, y] : dots) {
    out.insert({12 - static_cast<int>(std::lround((y - 2) / 4)),
                static_cast<int>(std::lround((x - 2) / 4)) + 1});
  }
  return out;
}

}  // namespace fixtures
