#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bumpless/grid.hpp"

namespace bumpless {

// Route of one pipe from its bottom entry (column = label) to its right exit
// (row = starting row). Corners alternate between R-shaped turns (north to
// east) and J-shaped turns (east to north); a turn may sit inside a cross tile
// when the pipe touches another pipe there.
struct PipePath {
  int label = 0;
  std::vector<PipeStep> steps;

  friend bool operator==(const PipePath&, const PipePath&) = default;
};

enum class EventKind { droop, mini_undroop, skip };

struct TileDelta {
  Cell cell;
  Tile before;
  Tile after;

  friend bool operator==(const TileDelta&, const TileDelta&) = default;
};

struct TraceEvent {
  EventKind kind = EventKind::skip;
  int pipe = 0;
  Cell cut{};  // droop: the H tile turned into the pipe's new R corner
  Cell se{};   // mini_undroop: rectangle corners
  Cell nw{};
  std::vector<TileDelta> deltas;  // row-major

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

std::string to_string(const TraceEvent& e);

// Turn cells of pipe q above a long line. turns[k] = (a_{k+1}, b_{k+1});
// b0 is the long line's column and top_row = a_{r+1} = w^-1(q).
struct CornerLadder {
  int b0 = 0;
  std::vector<Cell> turns;
  int top_row = 0;
};

struct LongLine {
  int pipe = 0;
  Cell cell;  // westmost H tile of the topmost offending run

  friend bool operator==(const LongLine&, const LongLine&) = default;
};

// Mutable state of the construction: per-pipe routes are the source of truth
// and the tile grid is their superposition with every J tile marked.
class AlgoState {
 public:
  // Starts from the snow Rothe pipedream of w.
  explicit AlgoState(const Permutation& w);

  const Permutation& perm() const noexcept { return perm_; }
  int size() const noexcept { return perm_.size(); }
  const TileGrid& grid() const noexcept { return grid_; }
  const Srpd& start() const noexcept { return start_; }
  const PipePath& path(int pipe) const { return paths_[pipe - 1]; }
  std::span<const PipePath> paths() const noexcept { return paths_; }
  int stars_remaining(int pipe) const { return stars_.at(pipe); }
  // Pipes by decreasing starting row: w(n), w(n-1), ..., w(1).
  const std::vector<int>& queue() const noexcept { return queue_; }
  const std::set<int>& processed() const noexcept { return processed_; }
  const std::vector<TraceEvent>& trace() const noexcept { return trace_; }

  // Pipes passing through `c` with their strands.
  std::span<const std::pair<int, Strand>> occupants(Cell c) const;
  // Unordered pairs {a < b} meeting at a cross where both go straight.
  std::map<std::pair<int, int>, int> p_cross_counts() const;

  // Throws InvariantViolation naming the first broken property. Tile reading
  // is compared with w only when `quiescent` (no long line pending): right
  // after a droop, two pipes that merely touch can still read as crossing.
  void check_invariants(bool quiescent = false) const;
  // True when reading the tiles sends every pipe along its recorded route.
  // Intermediate states may fail this where two pipes touch before crossing.
  bool routes_match_reading() const;

 private:
  friend void droop_pipe(AlgoState&, int);
  friend void mini_undroop(AlgoState&, const CornerLadder&, int, int);

  // Recomputes grid and occupancy from paths; returns the colliding cell on
  // failure and leaves the previous state untouched.
  std::optional<Cell> commit(std::vector<PipePath> paths);
  std::vector<TileDelta> diff(const TileGrid& before) const;

  Permutation perm_;
  Srpd start_;
  TileGrid grid_;
  std::vector<PipePath> paths_;
  std::vector<std::vector<std::pair<int, Strand>>> occupancy_;
  std::map<int, int> stars_;
  std::vector<int> queue_;
  std::set<int> processed_;
  std::vector<TraceEvent> trace_;
};

inline AlgoState init_state(const Permutation& w) { return AlgoState(w); }

// Reroutes pipe p through its stars by the local drooping rules. Records a
// skip when p carries no stars.
void droop_pipe(AlgoState& s, int p);

// Topmost H tile lying outside its pipe's starting row; ties broken by
// column, then by pipe label.
std::optional<LongLine> topmost_long_line(const AlgoState& s);
std::optional<LongLine> topmost_long_line_of(const AlgoState& s, int pipe);

CornerLadder corner_ladder(const AlgoState& s, int q, Cell long_line);

// Moves q's corner at (a_i, b_i) to (a_{i+1}, b_{i-1}). `i` is 1-based.
void mini_undroop(AlgoState& s, const CornerLadder& ladder, int q, int i);

// Undroops until no long line remains, finishing one pipe before turning to
// the next topmost offender.
void resolve_long_lines(AlgoState& s);

struct MaximalResult {
  Mbpd diagram;
  Srpd start;
  std::vector<TraceEvent> trace;
};

// Full construction. The result is checked to read back to w and to carry
// weights (rajcode(w), rajcode(w^-1)).
MaximalResult run_maximal(const Permutation& w);

// Applies the trace deltas to `start`, checking every recorded before-tile.
TileGrid replay_trace(const TileGrid& start, std::span<const TraceEvent> trace);

}  // namespace bumpless
