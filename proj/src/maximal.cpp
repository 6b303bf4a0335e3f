#include "bumpless/maximal.hpp"

#include <algorithm>

#include "bumpless/snow.hpp"

namespace bumpless {

namespace {

std::string event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::droop: return "droop";
    case EventKind::mini_undroop: return "mini_undroop";
    case EventKind::skip: return "skip";
  }
  return "?";
}

std::vector<PipePath> paths_from_reading(const TileGrid& g) {
  Reading reading = read_permutation(g);
  std::vector<PipePath> paths;
  for (int p = 1; p <= g.size(); ++p) paths.push_back({p, std::move(reading.routes[p - 1])});
  return paths;
}

int weighted_in_row(const TileGrid& g, int row) {
  int count = 0;
  for (int c = 1; c <= g.size(); ++c) count += is_weighted(g.at(row, c));
  return count;
}

int weighted_in_col(const TileGrid& g, int col) {
  int count = 0;
  for (int r = 1; r <= g.size(); ++r) count += is_weighted(g.at(r, col));
  return count;
}

std::size_t index_of(const PipePath& path, Cell c) {
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    if (path.steps[k].cell == c) return k;
  }
  return path.steps.size();
}

// Row indices of the pipe's lone H tiles, largest first.
std::vector<int> h_rows(const AlgoState& s, int pipe) {
  std::vector<int> rows;
  for (const PipeStep& step : s.path(pipe).steps) {
    if (s.grid().at(step.cell) == Tile::horizontal) rows.push_back(step.cell.row);
  }
  std::sort(rows.rbegin(), rows.rend());
  return rows;
}

// Multiset ordering: `after` < `before` iff they differ and every element
// gained is dominated by some larger element lost.
bool multiset_decreases(std::vector<int> before, std::vector<int> after) {
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  std::vector<int> lost;
  std::vector<int> gained;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(lost));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(gained));
  if (lost.empty()) return false;
  const int max_lost = lost.back();
  return std::all_of(gained.begin(), gained.end(), [&](int g) { return g < max_lost; });
}

}  // namespace

std::string to_string(const TraceEvent& e) {
  std::string out = event_kind_name(e.kind) + " pipe " + std::to_string(e.pipe);
  if (e.kind == EventKind::droop) out += " cut " + to_string(e.cut);
  if (e.kind == EventKind::mini_undroop) out += " se " + to_string(e.se) + " nw " + to_string(e.nw);
  return out;
}

AlgoState::AlgoState(const Permutation& w)
    : perm_(w), start_(build_srpd(w)), grid_(start_.grid), stars_(start_.per_pipe_stars) {
  paths_ = paths_from_reading(grid_);
  if (const auto clash = commit(paths_)) {
    throw InvariantViolation("routes-superpose", "collision at " + to_string(*clash));
  }
  for (int row = w.size(); row >= 1; --row) queue_.push_back(w(row));
}

std::span<const std::pair<int, Strand>> AlgoState::occupants(Cell c) const {
  return occupancy_[static_cast<std::size_t>((c.row - 1) * size() + c.col - 1)];
}

std::optional<Cell> AlgoState::commit(std::vector<PipePath> paths) {
  const int n = size();
  std::vector<std::vector<PipeStep>> routes;
  for (const PipePath& p : paths) routes.push_back(p.steps);
  Cell clash{};
  auto grid = grid_from_routes(n, routes, true, &clash);
  if (!grid) return clash;
  std::vector<std::vector<std::pair<int, Strand>>> occupancy(static_cast<std::size_t>(n * n));
  for (const PipePath& p : paths) {
    for (const PipeStep& s : p.steps) {
      occupancy[static_cast<std::size_t>((s.cell.row - 1) * n + s.cell.col - 1)].push_back(
          {p.label, s.strand});
    }
  }
  grid_ = std::move(*grid);
  paths_ = std::move(paths);
  occupancy_ = std::move(occupancy);
  return std::nullopt;
}

bool AlgoState::routes_match_reading() const {
  const Reading reading = read_permutation(grid_);
  for (const PipePath& p : paths_) {
    if (reading.routes[p.label - 1] != p.steps) return false;
  }
  return true;
}

std::vector<TileDelta> AlgoState::diff(const TileGrid& before) const {
  std::vector<TileDelta> out;
  for (int r = 1; r <= size(); ++r) {
    for (int c = 1; c <= size(); ++c) {
      if (before.at(r, c) != grid_.at(r, c)) out.push_back({{r, c}, before.at(r, c), grid_.at(r, c)});
    }
  }
  return out;
}

std::map<std::pair<int, int>, int> AlgoState::p_cross_counts() const {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& cell : occupancy_) {
    if (cell.size() != 2) continue;
    if (cell[0].second == kStrandH || cell[0].second == kStrandV) {
      const auto [a, b] = std::minmax(cell[0].first, cell[1].first);
      ++counts[{a, b}];
    }
  }
  return counts;
}

void AlgoState::check_invariants(bool quiescent) const {
  const int n = size();
  for (const PipePath& p : paths_) {
    if (p.steps.empty() || p.steps.front().cell != Cell{n, p.label} ||
        p.steps.front().strand.in != kSouth) {
      throw InvariantViolation("route-shape", "pipe " + std::to_string(p.label) +
                                                  " does not enter from the bottom of its column");
    }
    if (p.steps.back().cell != Cell{perm_.preimage(p.label), n} ||
        p.steps.back().strand.out != kEast) {
      throw InvariantViolation("route-shape", "pipe " + std::to_string(p.label) +
                                                  " does not exit at its starting row");
    }
  }
  if (const ValidityReport report = validate_grid(grid_); !report) {
    throw InvariantViolation("valid-grid", report.message);
  }
  if (const Permutation read = read_permutation(grid_).perm; quiescent && read != perm_) {
    throw InvariantViolation("permutation-preserved",
                             "grid reads " + read.to_string() + ", expected " +
                                 perm_.to_string());
  }
  for (const auto& [pair, count] : p_cross_counts()) {
    if (count > 1) {
      throw InvariantViolation("at-most-one-p-cross",
                               "pipes " + std::to_string(pair.first) + " and " +
                                   std::to_string(pair.second) + " pass through each other " +
                                   std::to_string(count) + " times");
    }
  }
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const auto occ = occupants({r, c});
      if (occ.size() != 2) continue;
      const auto [a, b] = std::minmax(occ[0].first, occ[1].first);
      if (perm_.preimage(a) < perm_.preimage(b)) {
        throw InvariantViolation("noncrossing-pairs-stay-apart",
                                 "pipes " + std::to_string(a) + " and " + std::to_string(b) +
                                     " meet at " + to_string(Cell{r, c}));
      }
    }
  }
}

void droop_pipe(AlgoState& s, int p) {
  const int n = s.size();
  const int t = s.stars_.at(p);
  if (t == 0) {
    s.trace_.push_back({EventKind::skip, p, {}, {}, {}, {}});
    s.processed_.insert(p);
    return;
  }

  const int start_row = s.perm_.preimage(p);
  const PipePath& old_path = s.path(p);
  std::size_t run_begin = 0;
  while (run_begin < old_path.steps.size() && old_path.steps[run_begin].cell.row != start_row) {
    ++run_begin;
  }
  std::size_t cut_index = old_path.steps.size();
  int seen = 0;
  for (std::size_t k = run_begin + 1; k < old_path.steps.size(); ++k) {
    if (s.grid_.at(old_path.steps[k].cell) == Tile::horizontal && ++seen == t) {
      cut_index = k;
      break;
    }
  }
  if (cut_index == old_path.steps.size()) {
    throw Error(Errc::missing_h_tile, "pipe " + std::to_string(p) + " has " + std::to_string(seen) +
                                          " H tiles east of its elbow, needs " + std::to_string(t));
  }
  const Cell cut = old_path.steps[cut_index].cell;

  // Strands of every other pipe; p's old tail is already gone.
  auto others = [&](Cell c) {
    std::vector<Strand> out;
    for (const auto& [pipe, strand] : s.occupants(c)) {
      if (pipe != p) out.push_back(strand);
    }
    return out;
  };
  auto only = [](const std::vector<Strand>& v, Strand x) { return v.size() == 1 && v[0] == x; };
  auto conflict = [&](Cell c, std::string_view moving) {
    return Error(Errc::rule_conflict, "pipe " + std::to_string(p) + " moving " +
                                          std::string(moving) + " into " + to_string(c));
  };

  // Walk backwards from the cut: south, west, and finally down column p.
  std::vector<PipeStep> reversed;
  Cell at{cut.row + 1, cut.col};
  bool moving_down = true;
  while (true) {
    if (moving_down) {
      if (at.row > n) throw conflict(at, "down off the bottom edge");
      const auto o = others(at);
      if (o.empty() || only(o, kStrandR)) {
        // blank becomes a marked elbow; an R becomes a touching cross
        reversed.push_back({at, kStrandJ});
        moving_down = false;
        --at.col;
      } else if (only(o, kStrandH)) {
        reversed.push_back({at, kStrandV});
        ++at.row;
      } else {
        throw conflict(at, "down");
      }
    } else {
      if (at.col < 1) throw conflict(at, "left off the grid");
      const auto o = others(at);
      if (at.col == p) {
        if (!o.empty() && !only(o, kStrandJ)) throw conflict(at, "left into its own column");
        reversed.push_back({at, kStrandR});
        for (int r = at.row + 1; r <= n; ++r) {
          const auto below = others({r, p});
          if (!below.empty() && !only(below, kStrandH)) throw conflict({r, p}, "down its own column");
          reversed.push_back({{r, p}, kStrandV});
        }
        break;
      }
      if (o.empty() || only(o, kStrandJ)) {
        // blank becomes an R; a marked elbow becomes a touching cross
        reversed.push_back({at, kStrandR});
        moving_down = true;
        ++at.row;
      } else if (only(o, kStrandV)) {
        reversed.push_back({at, kStrandH});
        --at.col;
      } else {
        throw conflict(at, "left");
      }
    }
  }

  PipePath redrawn{p, {reversed.rbegin(), reversed.rend()}};
  redrawn.steps.push_back({cut, kStrandR});
  redrawn.steps.insert(redrawn.steps.end(), old_path.steps.begin() + static_cast<long>(cut_index) + 1,
                       old_path.steps.end());

  const TileGrid before = s.grid_;
  std::vector<PipePath> next = s.paths_;
  next[p - 1] = std::move(redrawn);
  if (const auto clash = s.commit(std::move(next))) throw conflict(*clash, "while redrawing");

  s.stars_[p] = 0;
  s.processed_.insert(p);
  s.trace_.push_back({EventKind::droop, p, cut, {}, {}, s.diff(before)});
  s.check_invariants();

  const int row_gain = weighted_in_row(s.grid_, start_row) - weighted_in_row(before, start_row);
  const int col_gain = weighted_in_col(s.grid_, p) - weighted_in_col(before, p);
  if (row_gain != t || col_gain != t) {
    throw InvariantViolation("droop-releases-stars",
                             "pipe " + std::to_string(p) + " with " + std::to_string(t) +
                                 " stars changed row weight by " + std::to_string(row_gain) +
                                 " and column weight by " + std::to_string(col_gain));
  }
}

std::optional<LongLine> topmost_long_line(const AlgoState& s) {
  const int n = s.size();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (s.grid().at(r, c) != Tile::horizontal) continue;
      const int owner = s.occupants({r, c})[0].first;
      if (s.perm().preimage(owner) != r) return LongLine{owner, {r, c}};
    }
  }
  return std::nullopt;
}

std::optional<LongLine> topmost_long_line_of(const AlgoState& s, int pipe) {
  std::optional<LongLine> best;
  const int start_row = s.perm().preimage(pipe);
  for (const PipeStep& step : s.path(pipe).steps) {
    if (step.cell.row == start_row || s.grid().at(step.cell) != Tile::horizontal) continue;
    if (!best || step.cell < best->cell) best = LongLine{pipe, step.cell};
  }
  return best;
}

CornerLadder corner_ladder(const AlgoState& s, int q, Cell long_line) {
  const PipePath& path = s.path(q);
  const std::size_t k0 = index_of(path, long_line);
  if (k0 == path.steps.size() || path.steps[k0].strand != kStrandH) {
    throw InvariantViolation("ladder-start", "pipe " + std::to_string(q) +
                                                 " does not run east through " + to_string(long_line));
  }
  CornerLadder ladder{long_line.col, {}, s.perm().preimage(q)};
  for (std::size_t k = k0; k < path.steps.size(); ++k) {
    if (path.steps[k].strand == kStrandJ) ladder.turns.push_back(path.steps[k].cell);
  }
  if (ladder.turns.empty()) {
    throw Error(Errc::empty_ladder, "pipe " + std::to_string(q) + " never turns north after " +
                                        to_string(long_line));
  }
  for (std::size_t k = 0; k < ladder.turns.size(); ++k) {
    const int next_row = k + 1 < ladder.turns.size() ? ladder.turns[k + 1].row : ladder.top_row;
    const int prev_col = k == 0 ? ladder.b0 : ladder.turns[k - 1].col;
    if (!(ladder.turns[k].row > next_row && ladder.turns[k].col > prev_col)) {
      throw InvariantViolation("ladder-staircase",
                               "turn " + to_string(ladder.turns[k]) + " of pipe " +
                                   std::to_string(q) + " breaks the staircase");
    }
  }
  return ladder;
}

void mini_undroop(AlgoState& s, const CornerLadder& ladder, int q, int i) {
  const int r = static_cast<int>(ladder.turns.size());
  if (i < 1 || i > r) {
    throw Error(Errc::empty_ladder, "ladder index " + std::to_string(i) + " outside 1.." +
                                        std::to_string(r));
  }
  const Cell se = ladder.turns[i - 1];
  const int prev_col = i == 1 ? ladder.b0 : ladder.turns[i - 2].col;
  const int next_row = i < r ? ladder.turns[i].row : ladder.top_row;
  const Cell nw{next_row, prev_col};
  const Cell approach{se.row, prev_col};  // where q currently heads east along row a_i
  const Cell exit{next_row, se.col};      // where q currently turns east after climbing

  const PipePath& path = s.path(q);
  const std::size_t k0 = index_of(path, approach);
  const std::size_t k1 = index_of(path, exit);
  const Strand expected_approach = i == 1 ? kStrandH : kStrandR;
  if (k0 >= k1 || k1 == path.steps.size() || path.steps[k0].strand != expected_approach ||
      path.steps[k1].strand != kStrandR) {
    throw InvariantViolation("ladder-start", "pipe " + std::to_string(q) +
                                                 " does not match its ladder at " + to_string(se));
  }

  std::vector<PipeStep> segment;
  segment.push_back({approach, {path.steps[k0].strand.in, kNorth}});
  for (int row = se.row - 1; row > next_row; --row) segment.push_back({{row, prev_col}, kStrandV});
  segment.push_back({nw, kStrandR});
  for (int col = prev_col + 1; col <= se.col; ++col) segment.push_back({{next_row, col}, kStrandH});

  PipePath moved{q, {}};
  moved.steps.assign(path.steps.begin(), path.steps.begin() + static_cast<long>(k0));
  moved.steps.insert(moved.steps.end(), segment.begin(), segment.end());
  moved.steps.insert(moved.steps.end(), path.steps.begin() + static_cast<long>(k1) + 1,
                     path.steps.end());

  const TileGrid before = s.grid_;
  std::vector<PipePath> next = s.paths_;
  next[q - 1] = std::move(moved);
  if (const auto clash = s.commit(std::move(next))) {
    throw Error(Errc::rectangle_obstruction, "pipe " + std::to_string(q) + " blocked at " +
                                                 to_string(*clash) + " in rectangle " +
                                                 to_string(se) + "-" + to_string(nw));
  }
  s.trace_.push_back({EventKind::mini_undroop, q, {}, se, nw, s.diff(before)});
  s.check_invariants();
}

void resolve_long_lines(AlgoState& s) {
  const int n = s.size();
  const int guard = n * n * n;
  int steps = 0;
  while (const auto offender = topmost_long_line(s)) {
    const int q = offender->pipe;
    while (const auto line = topmost_long_line_of(s, q)) {
      if (++steps > guard) {
        throw Error(Errc::non_termination, "more than " + std::to_string(guard) + " mini-undroops");
      }
      const std::vector<int> rows_before = h_rows(s, q);
      mini_undroop(s, corner_ladder(s, q, line->cell), q, 1);
      if (!multiset_decreases(rows_before, h_rows(s, q))) {
        throw InvariantViolation("undroop-raises-h-tiles",
                                 "mini-undroop of pipe " + std::to_string(q) +
                                     " did not lower the rows of its H tiles");
      }
    }
  }
}

MaximalResult run_maximal(const Permutation& w) {
  AlgoState s(w);
  try {
    for (int p : s.queue()) {
      droop_pipe(s, p);
      resolve_long_lines(s);
      s.check_invariants(true);
      if (!s.routes_match_reading()) {
        throw InvariantViolation("reading-matches-routes",
                                 "tiles read along other routes after pipe " + std::to_string(p));
      }
    }
  } catch (const InvariantViolation& e) {
    const std::string where = s.trace().empty() ? "initial state" : to_string(s.trace().back());
    const std::string prefix = std::string(errc_name(Errc::invariant_violation)) + ": " + e.invariant() + ": ";
    throw InvariantViolation(e.invariant(), std::string(e.what()).substr(prefix.size()) + " [w=" + w.to_string() +
                                                " after " + std::to_string(s.trace().size()) +
                                                " events, last: " + where + "]");
  } catch (const Error& e) {
    const std::string where = s.trace().empty() ? "initial state" : to_string(s.trace().back());
    const std::string prefix = std::string(errc_name(e.code())) + ": ";
    throw Error(e.code(), std::string(e.what()).substr(prefix.size()) + " [w=" + w.to_string() + " after " +
                              std::to_string(s.trace().size()) + " events, last: " + where + "]");
  }

  Mbpd result = Mbpd::from_grid(s.grid());
  const auto [raj, raj_inv] = rajcode_pair(w);
  if (result.perm() != w) {
    throw InvariantViolation("permutation-preserved", "final diagram reads " +
                                                          result.perm().to_string());
  }
  if (result.rwt() != raj) {
    throw InvariantViolation("row-weight-is-rajcode", "w=" + w.to_string() + " rwt " +
                                                          to_string(result.rwt()) + " != " +
                                                          to_string(raj));
  }
  if (result.cwt() != raj_inv) {
    throw InvariantViolation("column-weight-is-inverse-rajcode",
                             "w=" + w.to_string() + " cwt " + to_string(result.cwt()) + " != " +
                                 to_string(raj_inv));
  }
  return MaximalResult{std::move(result), s.start(), s.trace()};
}

TileGrid replay_trace(const TileGrid& start, std::span<const TraceEvent> trace) {
  TileGrid g = start;
  for (const TraceEvent& e : trace) {
    for (const TileDelta& d : e.deltas) {
      if (g.at(d.cell) != d.before) {
        throw Error(Errc::decode_error, "trace expects " + std::string(1, tile_letter(d.before)) +
                                            " at " + to_string(d.cell) + " but finds " +
                                            tile_letter(g.at(d.cell)));
      }
      g.set(d.cell, d.after);
    }
  }
  return g;
}

}  // namespace bumpless
