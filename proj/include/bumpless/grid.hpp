#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bumpless/cell.hpp"
#include "bumpless/error.hpp"
#include "bumpless/perm.hpp"
#include "bumpless/tiles.hpp"

namespace bumpless {

// An n x n array of tiles with no validity guarantee.
class TileGrid {
 public:
  explicit TileGrid(int n, Tile fill = Tile::blank);
  // One string of tile letters per row, top row first. Throws
  // Errc::decode_error naming the first bad row/column.
  static TileGrid from_rows(std::span<const std::string> rows);

  int size() const noexcept { return n_; }
  Tile at(int row, int col) const { return tiles_[index(row, col)]; }
  Tile at(Cell c) const { return at(c.row, c.col); }
  void set(Cell c, Tile t) { tiles_[index(c.row, c.col)] = t; }

  std::vector<std::string> rows() const;
  // Row strings concatenated; orders grids deterministically.
  std::string key() const;
  std::set<Cell> cells_with(Tile t) const;

  friend bool operator==(const TileGrid&, const TileGrid&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
  }

  int n_;
  std::vector<Tile> tiles_;
};

struct ValidityReport {
  bool ok = true;
  Errc kind = Errc::edge_mismatch;  // edge_mismatch or boundary_violation
  Cell cell{};
  Side side = kNorth;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

// Edge matching between neighbours plus the boundary: every bottom edge and
// every right edge occupied, no top or left edge occupied.
ValidityReport validate_grid(const TileGrid& g);

// A crossing met during the reading sweep. `from_west` is the label entering
// the cell from the left, `from_south` the label entering from below.
struct Crossing {
  Cell cell;
  int from_west = 0;
  int from_south = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PipeStep {
  Cell cell;
  Strand strand;

  friend bool operator==(const PipeStep&, const PipeStep&) = default;
};

struct Reading {
  Permutation perm;
  std::vector<Crossing> crossings;  // effective crossings, sweep order
  std::vector<Crossing> bounces;    // crossings of an already crossed pair
  std::vector<std::vector<PipeStep>> routes;  // routes[p - 1], bottom edge first
};

// Sweeps bottom row to top, left to right. A cross tile whose two labels have
// already crossed sends them back the way they came (the later crossing is
// ignored). Throws Errc::edge_mismatch / Errc::boundary_violation on an
// invalid grid.
Reading read_permutation(const TileGrid& g);

// Counts of blank and marked tiles per row and per column.
std::pair<WeightVector, WeightVector> grid_weights(const TileGrid& g);

// A validated marked bumpless pipedream with its reading and weights cached.
class Mbpd {
 public:
  static Mbpd from_grid(TileGrid grid);

  const TileGrid& grid() const noexcept { return grid_; }
  const Permutation& perm() const noexcept { return perm_; }
  const WeightVector& rwt() const noexcept { return rwt_; }
  const WeightVector& cwt() const noexcept { return cwt_; }
  int size() const noexcept { return grid_.size(); }
  int blank_count() const noexcept { return blank_count_; }
  int mark_count() const noexcept { return mark_count_; }
  int weight() const noexcept { return blank_count_ + mark_count_; }

  friend bool operator==(const Mbpd& a, const Mbpd& b) { return a.grid_ == b.grid_; }

 private:
  Mbpd(TileGrid grid, Permutation perm) : grid_(std::move(grid)), perm_(std::move(perm)) {}

  TileGrid grid_;
  Permutation perm_;
  WeightVector rwt_;
  WeightVector cwt_;
  int blank_count_ = 0;
  int mark_count_ = 0;
};

// The Rothe pipedream plus the snow stars, the starting point of the
// maximal construction.
struct Srpd {
  TileGrid grid;
  Permutation perm;
  std::set<Cell> stars;
  std::map<int, int> per_pipe_stars;
};

// Pipe p rises in column p to row w^-1(p), turns at an R tile and runs east.
Mbpd rothe_pipedream(const Permutation& w);

// Throws Errc::star_on_non_horizontal if a star lands on anything but an H.
Srpd build_srpd(const Permutation& w);

// Superimposes per-pipe routes into a tile grid. Returns the colliding cell
// through `collision` (when non-null) and nullopt if two strands clash.
std::optional<TileGrid> grid_from_routes(int n, std::span<const std::vector<PipeStep>> routes,
                                         bool mark_elbows, Cell* collision = nullptr);

}  // namespace bumpless
