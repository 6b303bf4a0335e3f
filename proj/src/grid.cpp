#include "bumpless/grid.hpp"

#include <optional>

#include "bumpless/snow.hpp"

namespace bumpless {

TileGrid::TileGrid(int n, Tile fill) : n_(n), tiles_(static_cast<std::size_t>(n * n), fill) {
  if (n < 1 || n > kMaxN) {
    throw Error(Errc::malformed_input, "grid size " + std::to_string(n) + " out of range");
  }
}

TileGrid TileGrid::from_rows(std::span<const std::string> rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1 || n > kMaxN) {
    throw Error(Errc::decode_error, "expected 1.." + std::to_string(kMaxN) + " rows, got " +
                                        std::to_string(n));
  }
  TileGrid g(n);
  for (int r = 1; r <= n; ++r) {
    const std::string& line = rows[r - 1];
    if (static_cast<int>(line.size()) != n) {
      throw Error(Errc::decode_error, "row " + std::to_string(r) + " has length " +
                                          std::to_string(line.size()) + ", expected " +
                                          std::to_string(n));
    }
    for (int c = 1; c <= n; ++c) {
      const auto t = tile_from_letter(line[c - 1]);
      if (!t) {
        throw Error(Errc::decode_error, std::string("unknown tile letter '") + line[c - 1] +
                                            "' at " + to_string(Cell{r, c}));
      }
      g.set({r, c}, *t);
    }
  }
  return g;
}

std::vector<std::string> TileGrid::rows() const {
  std::vector<std::string> out;
  for (int r = 1; r <= n_; ++r) {
    std::string line;
    for (int c = 1; c <= n_; ++c) line += tile_letter(at(r, c));
    out.push_back(std::move(line));
  }
  return out;
}

std::string TileGrid::key() const {
  std::string out;
  for (Tile t : tiles_) out += tile_letter(t);
  return out;
}

std::set<Cell> TileGrid::cells_with(Tile t) const {
  std::set<Cell> out;
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) {
      if (at(r, c) == t) out.insert({r, c});
    }
  }
  return out;
}

namespace {

ValidityReport failure(Errc kind, Cell cell, Side side, std::string message) {
  return ValidityReport{false, kind, cell, side, std::move(message)};
}

}  // namespace

ValidityReport validate_grid(const TileGrid& g) {
  const int n = g.size();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const Cell cell{r, c};
      const std::uint8_t m = edge_mask(g.at(cell));
      if (r == n && !(m & kSouth)) {
        return failure(Errc::boundary_violation, cell, kSouth,
                       "bottom edge unoccupied at column " + std::to_string(c));
      }
      if (c == n && !(m & kEast)) {
        return failure(Errc::boundary_violation, cell, kEast,
                       "right edge unoccupied at row " + std::to_string(r));
      }
      if (r == 1 && (m & kNorth)) {
        return failure(Errc::boundary_violation, cell, kNorth,
                       "pipe leaves through the top edge at column " + std::to_string(c));
      }
      if (c == 1 && (m & kWest)) {
        return failure(Errc::boundary_violation, cell, kWest,
                       "pipe enters through the left edge at row " + std::to_string(r));
      }
      if (c < n) {
        const bool east = m & kEast;
        const bool west = edge_mask(g.at(r, c + 1)) & kWest;
        if (east != west) {
          return failure(Errc::edge_mismatch, cell, kEast,
                         "east edge of " + to_string(cell) + " does not match its neighbour");
        }
      }
      if (r < n) {
        const bool south = m & kSouth;
        const bool north = edge_mask(g.at(r + 1, c)) & kNorth;
        if (south != north) {
          return failure(Errc::edge_mismatch, cell, kSouth,
                         "south edge of " + to_string(cell) + " does not match its neighbour");
        }
      }
    }
  }
  return {};
}

Reading read_permutation(const TileGrid& g) {
  if (const ValidityReport report = validate_grid(g); !report) {
    throw Error(report.kind, report.message);
  }
  const int n = g.size();
  std::vector<int> from_south(static_cast<std::size_t>(n) + 1);
  for (int c = 1; c <= n; ++c) from_south[c] = c;
  std::vector<std::vector<bool>> crossed(static_cast<std::size_t>(n) + 1,
                                         std::vector<bool>(static_cast<std::size_t>(n) + 1));
  std::vector<std::vector<PipeStep>> routes(static_cast<std::size_t>(n));
  std::vector<Crossing> crossings;
  std::vector<Crossing> bounces;
  std::vector<int> exits(static_cast<std::size_t>(n), 0);

  auto step = [&](int label, Cell cell, Strand strand) {
    routes[label - 1].push_back({cell, strand});
  };

  for (int r = n; r >= 1; --r) {
    int from_west = 0;
    for (int c = 1; c <= n; ++c) {
      const Cell cell{r, c};
      const int west = from_west;
      const int south = from_south[c];
      int north = 0;
      int east = 0;
      switch (g.at(cell)) {
        case Tile::blank:
          break;
        case Tile::horizontal:
          east = west;
          step(west, cell, kStrandH);
          break;
        case Tile::vertical:
          north = south;
          step(south, cell, kStrandV);
          break;
        case Tile::se_elbow:
          east = south;
          step(south, cell, kStrandR);
          break;
        case Tile::nw_elbow:
        case Tile::marked:
          north = west;
          step(west, cell, kStrandJ);
          break;
        case Tile::cross:
          if (crossed[west][south]) {
            north = west;
            east = south;
            step(west, cell, kStrandJ);
            step(south, cell, kStrandR);
            bounces.push_back({cell, west, south});
          } else {
            east = west;
            north = south;
            crossed[west][south] = crossed[south][west] = true;
            step(west, cell, kStrandH);
            step(south, cell, kStrandV);
            crossings.push_back({cell, west, south});
          }
          break;
      }
      from_south[c] = north;
      from_west = east;
    }
    exits[r - 1] = from_west;
  }
  return Reading{Permutation::from_images(std::move(exits)), std::move(crossings),
                 std::move(bounces), std::move(routes)};
}

std::pair<WeightVector, WeightVector> grid_weights(const TileGrid& g) {
  const int n = g.size();
  WeightVector rows(static_cast<std::size_t>(n), 0);
  WeightVector cols(static_cast<std::size_t>(n), 0);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (is_weighted(g.at(r, c))) {
        ++rows[r - 1];
        ++cols[c - 1];
      }
    }
  }
  return {rows, cols};
}

Mbpd Mbpd::from_grid(TileGrid grid) {
  Reading reading = read_permutation(grid);
  Mbpd m(std::move(grid), std::move(reading.perm));
  std::tie(m.rwt_, m.cwt_) = grid_weights(m.grid_);
  m.blank_count_ = static_cast<int>(m.grid_.cells_with(Tile::blank).size());
  m.mark_count_ = static_cast<int>(m.grid_.cells_with(Tile::marked).size());
  return m;
}

std::optional<TileGrid> grid_from_routes(int n, std::span<const std::vector<PipeStep>> routes,
                                         bool mark_elbows, Cell* collision) {
  std::vector<std::vector<Strand>> strands(static_cast<std::size_t>(n * n));
  for (const auto& route : routes) {
    for (const PipeStep& s : route) {
      strands[static_cast<std::size_t>((s.cell.row - 1) * n + s.cell.col - 1)].push_back(s.strand);
    }
  }
  TileGrid g(n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const auto t = tile_for_strands(strands[static_cast<std::size_t>((r - 1) * n + c - 1)],
                                      mark_elbows);
      if (!t) {
        if (collision) *collision = {r, c};
        return std::nullopt;
      }
      g.set({r, c}, *t);
    }
  }
  return g;
}

namespace {

std::vector<std::vector<PipeStep>> rothe_routes(const Permutation& w) {
  const int n = w.size();
  std::vector<std::vector<PipeStep>> routes(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    const int start = w.preimage(p);
    auto& route = routes[p - 1];
    for (int r = n; r > start; --r) route.push_back({{r, p}, kStrandV});
    route.push_back({{start, p}, kStrandR});
    for (int c = p + 1; c <= n; ++c) route.push_back({{start, c}, kStrandH});
  }
  return routes;
}

}  // namespace

Mbpd rothe_pipedream(const Permutation& w) {
  const auto routes = rothe_routes(w);
  auto grid = grid_from_routes(w.size(), routes, true);
  if (!grid) throw InvariantViolation("rothe-pipedream", "pipes collide for " + w.to_string());
  return Mbpd::from_grid(std::move(*grid));
}

Srpd build_srpd(const Permutation& w) {
  Mbpd rpd = rothe_pipedream(w);
  const auto snow = snow_diagrams(rothe_diagram(w)).first;
  for (const Cell& star : snow.snow_cells) {
    if (rpd.grid().at(star) != Tile::horizontal) {
      throw Error(Errc::star_on_non_horizontal,
                  "star " + to_string(star) + " holds tile " + tile_letter(rpd.grid().at(star)));
    }
  }
  return Srpd{rpd.grid(), w, snow.snow_cells, stars_per_pipe(w)};
}

}  // namespace bumpless
