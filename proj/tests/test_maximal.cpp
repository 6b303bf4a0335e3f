#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bumpless/maximal.hpp"
#include "bumpless/snow.hpp"
#include "support/fixtures.hpp"

using namespace bumpless;
using fixtures::cells;

namespace {

std::vector<int> undrooped_pipes(const std::vector<TraceEvent>& trace) {
  std::vector<int> pipes;
  for (const TraceEvent& e : trace) {
    if (e.kind == EventKind::mini_undroop && (pipes.empty() || pipes.back() != e.pipe)) {
      pipes.push_back(e.pipe);
    }
  }
  return pipes;
}

const TileDelta* delta_at(const TraceEvent& e, Cell c) {
  for (const TileDelta& d : e.deltas) {
    if (d.cell == c) return &d;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("21453") {
  const MaximalResult r = run_maximal(parse_permutation("21453"));
  CHECK(r.diagram.grid().cells_with(Tile::blank) == cells({{1, 1}, {1, 2}, {2, 1}, {4, 3}}));
  CHECK(r.diagram.grid().cells_with(Tile::marked) == cells({{3, 3}}));
  CHECK(r.diagram.rwt() == WeightVector{2, 1, 1, 1, 0});
  CHECK(r.diagram.cwt() == WeightVector{2, 1, 2, 0, 0});
  CHECK(undrooped_pipes(r.trace).empty());
}

TEST_CASE("1423") {
  const MaximalResult r = run_maximal(parse_permutation("1423"));
  CHECK(r.diagram.grid().cells_with(Tile::blank) == cells({{1, 1}, {2, 3}}));
  CHECK(r.diagram.grid().cells_with(Tile::marked) == cells({{2, 2}}));
  CHECK(r.diagram.rwt() == WeightVector{1, 2, 0, 0});
  CHECK(r.diagram.cwt() == WeightVector{1, 1, 1, 0});
}

TEST_CASE("5241736 droops without undrooping") {
  const MaximalResult r = run_maximal(parse_permutation("5241736"));
  const auto first = std::find_if(r.trace.begin(), r.trace.end(),
                                  [](const TraceEvent& e) { return e.kind == EventKind::droop; });
  REQUIRE(first != r.trace.end());
  CHECK(first->pipe == 1);
  CHECK(first->cut == Cell{4, 3});
  const std::vector<std::pair<Cell, std::pair<Tile, Tile>>> expected = {
      {{4, 3}, {Tile::horizontal, Tile::se_elbow}},
      {{5, 3}, {Tile::blank, Tile::marked}},
      {{5, 2}, {Tile::vertical, Tile::cross}},
      {{5, 1}, {Tile::vertical, Tile::se_elbow}},
      {{4, 1}, {Tile::se_elbow, Tile::blank}},
      {{4, 2}, {Tile::cross, Tile::vertical}},
  };
  for (const auto& [cell, change] : expected) {
    const TileDelta* d = delta_at(*first, cell);
    REQUIRE_MESSAGE(d, to_string(cell));
    CHECK(d->before == change.first);
    CHECK(d->after == change.second);
  }
  CHECK(undrooped_pipes(r.trace).empty());
  CHECK(r.diagram.grid() == fixtures::dhat_5241736());
  CHECK(r.diagram.grid().cells_with(Tile::marked) == cells({{5, 3}, {3, 4}, {5, 6}}));
}

TEST_CASE("the n = 12 example") {
  const MaximalResult r = run_maximal(fixtures::big12());
  CHECK(undrooped_pipes(r.trace) == std::vector<int>{1, 4, 3});
  std::vector<int> droops;
  for (const TraceEvent& e : r.trace) {
    if (e.kind == EventKind::droop) droops.push_back(e.pipe);
  }
  CHECK(droops == std::vector<int>{2, 3, 4, 1, 6});
  // every undroop comes after the last droop
  const auto last_droop = std::find_if(r.trace.rbegin(), r.trace.rend(), [](const TraceEvent& e) {
    return e.kind == EventKind::droop;
  });
  CHECK(last_droop->pipe == 6);
  CHECK(r.diagram.grid() == fixtures::dhat_big12());
  CHECK(r.diagram.grid().cells_with(Tile::marked) == fixtures::big12_marks());
}

TEST_CASE("starting state") {
  const AlgoState s(parse_permutation("251634"));
  CHECK(s.queue() == std::vector<int>{4, 3, 6, 1, 5, 2});
  CHECK(s.stars_remaining(2) == 2);
  CHECK(s.stars_remaining(1) == 1);
  CHECK(s.grid() == rothe_pipedream(parse_permutation("251634")).grid());
  CHECK_NOTHROW(s.check_invariants(true));
  CHECK_FALSE(topmost_long_line(s));
}

TEST_CASE("droop and skip events") {
  AlgoState s(parse_permutation("21453"));
  droop_pipe(s, 3);
  REQUIRE(s.trace().size() == 1);
  CHECK(s.trace()[0].kind == EventKind::skip);
  droop_pipe(s, 1);
  CHECK(s.trace().back().kind == EventKind::droop);
  CHECK(s.stars_remaining(1) == 0);
  CHECK(s.processed().contains(1));
}

TEST_CASE("undroop cascade on one pipe") {
  AlgoState s(fixtures::big12());
  for (int p : {7, 5, 8, 2, 9, 10, 11, 12, 3, 4, 1, 6}) droop_pipe(s, p);
  const auto line = topmost_long_line(s);
  REQUIRE(line);
  CHECK(line->pipe == 1);
  CHECK(topmost_long_line_of(s, 1) == line);
  const CornerLadder ladder = corner_ladder(s, 1, line->cell);
  CHECK(ladder.b0 == line->cell.col);
  CHECK(ladder.top_row == 2);
  REQUIRE_FALSE(ladder.turns.empty());
  const Cell se = ladder.turns[0];
  const Cell nw{ladder.turns.size() > 1 ? ladder.turns[1].row : ladder.top_row, ladder.b0};
  mini_undroop(s, ladder, 1, 1);
  CHECK(s.trace().back().kind == EventKind::mini_undroop);
  CHECK(s.trace().back().se == se);
  CHECK(s.trace().back().nw == nw);
  int steps = 1;
  while (const auto next = topmost_long_line_of(s, 1)) {
    mini_undroop(s, corner_ladder(s, 1, next->cell), 1, 1);
    ++steps;
  }
  CHECK(steps == 3);
  CHECK_FALSE(topmost_long_line_of(s, 1));
}

TEST_CASE("bad ladder index") {
  AlgoState s(fixtures::big12());
  const CornerLadder ladder{1, {}, 1};
  CHECK_THROWS_AS(mini_undroop(s, ladder, 1, 1), Error);
}

TEST_CASE("identity and dominant permutations keep the Rothe pipedream") {
  for (int n = 1; n <= 8; ++n) {
    const MaximalResult r = run_maximal(Permutation::identity(n));
    CHECK(r.diagram == rothe_pipedream(Permutation::identity(n)));
    CHECK(r.trace.size() == static_cast<std::size_t>(n));
  }
  for (const Permutation& w : all_permutations(5)) {
    if (!is_dominant(w)) continue;
    const MaximalResult r = run_maximal(w);
    CHECK(r.diagram == rothe_pipedream(w));
    CHECK(std::all_of(r.trace.begin(), r.trace.end(),
                      [](const TraceEvent& e) { return e.kind == EventKind::skip; }));
  }
}

TEST_CASE("replaying a trace reproduces the result") {
  for (const Permutation& w : {fixtures::big12(), parse_permutation("5241736"),
                               parse_permutation("312654")}) {
    const MaximalResult r = run_maximal(w);
    CHECK(replay_trace(r.start.grid, r.trace) == r.diagram.grid());
    CHECK(run_maximal(w).trace == r.trace);
  }
  const MaximalResult r = run_maximal(parse_permutation("5241736"));
  std::vector<TraceEvent> broken = r.trace;
  for (TraceEvent& e : broken) {
    if (!e.deltas.empty()) {
      e.deltas[0].before = Tile::cross == e.deltas[0].before ? Tile::blank : Tile::cross;
      break;
    }
  }
  CHECK_THROWS_AS(replay_trace(r.start.grid, broken), Error);
}

TEST_CASE("random permutations up to n = 10 keep their weights") {
  std::mt19937 rng(20260215);
  for (int n = 2; n <= 10; ++n) {
    for (int k = 0; k < 40; ++k) {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), rng);
      const Permutation w = Permutation::from_images(images);
      const MaximalResult r = run_maximal(w);
      CHECK(r.diagram.perm() == w);
      CHECK(r.diagram.rwt() == fixtures::rajcode_by_lis(w));
      CHECK(r.diagram.cwt() == fixtures::rajcode_by_lis(w.inverse()));
      CHECK(r.diagram.grid().cells_with(Tile::nw_elbow).empty());
    }
  }
}
