#include "bumpless/codec.hpp"

namespace bumpless {

namespace {

Json cell_json(Cell c) { return Json::array({c.row, c.col}); }

Json diagram_json(const TileGrid& g, const Permutation& perm, const std::set<Cell>* stars) {
  const auto [rwt, cwt] = grid_weights(g);
  Json doc;
  doc["n"] = g.size();
  doc["perm"] = std::vector<int>(perm.images().begin(), perm.images().end());
  doc["tiles"] = g.rows();
  if (stars) {
    Json list = Json::array();
    for (const Cell& c : *stars) list.push_back(cell_json(c));
    doc["stars"] = std::move(list);
  }
  doc["rwt"] = rwt;
  doc["cwt"] = cwt;
  return doc;
}

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::decode_error, what); }

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

template <typename T>
T as(const Json& value, const std::string& what) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    fail("field " + what + " has the wrong type");
  }
}

Cell cell_from(const Json& value, const std::string& what) {
  const auto pair = as<std::vector<int>>(value, what);
  if (pair.size() != 2) fail(what + " is not a [row, col] pair");
  return {pair[0], pair[1]};
}

Tile tile_from(const Json& value, const std::string& what) {
  const auto letter = as<std::string>(value, what);
  const auto tile = letter.size() == 1 ? tile_from_letter(letter[0]) : std::nullopt;
  if (!tile) fail(what + " has unknown tile \"" + letter + "\"");
  return *tile;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

std::string event_kind_text(EventKind k) {
  switch (k) {
    case EventKind::droop: return "droop";
    case EventKind::mini_undroop: return "mini_undroop";
    case EventKind::skip: return "skip";
  }
  return "?";
}

}  // namespace

Json to_json(const Mbpd& m) { return diagram_json(m.grid(), m.perm(), nullptr); }

Json to_json(const Srpd& s) { return diagram_json(s.grid, s.perm, &s.stars); }

Json to_json(std::span<const TraceEvent> trace) {
  Json events = Json::array();
  for (const TraceEvent& e : trace) {
    Json ev;
    ev["kind"] = event_kind_text(e.kind);
    ev["pipe"] = e.pipe;
    if (e.kind == EventKind::droop) ev["cut"] = cell_json(e.cut);
    if (e.kind == EventKind::mini_undroop) {
      ev["se"] = cell_json(e.se);
      ev["nw"] = cell_json(e.nw);
    }
    if (e.kind != EventKind::skip) {
      Json deltas = Json::array();
      for (const TileDelta& d : e.deltas) {
        deltas.push_back(Json::array({d.cell.row, d.cell.col, std::string(1, tile_letter(d.before)),
                                      std::string(1, tile_letter(d.after))}));
      }
      ev["deltas"] = std::move(deltas);
    }
    events.push_back(std::move(ev));
  }
  return events;
}

DiagramDocument diagram_from_json(const Json& doc) {
  const int n = as<int>(field(doc, "n"), "n");
  const auto rows = as<std::vector<std::string>>(field(doc, "tiles"), "tiles");
  if (static_cast<int>(rows.size()) != n) {
    fail("\"tiles\" has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  }
  TileGrid grid = TileGrid::from_rows(rows);
  if (const ValidityReport report = validate_grid(grid); !report) fail(report.message);
  Mbpd m = Mbpd::from_grid(std::move(grid));

  const auto perm = as<std::vector<int>>(field(doc, "perm"), "perm");
  if (perm != std::vector<int>(m.perm().images().begin(), m.perm().images().end())) {
    fail("\"perm\" disagrees with the tiles, which read " + m.perm().to_string());
  }
  if (doc.contains("rwt") && as<WeightVector>(doc.at("rwt"), "rwt") != m.rwt()) {
    fail("\"rwt\" disagrees with the tiles");
  }
  if (doc.contains("cwt") && as<WeightVector>(doc.at("cwt"), "cwt") != m.cwt()) {
    fail("\"cwt\" disagrees with the tiles");
  }
  std::optional<std::set<Cell>> stars;
  if (doc.contains("stars")) {
    stars.emplace();
    for (const Json& v : doc.at("stars")) {
      const Cell c = cell_from(v, "stars entry");
      if (c.row < 1 || c.row > n || c.col < 1 || c.col > n) fail("star " + to_string(c) + " off the grid");
      if (m.grid().at(c) != Tile::horizontal) fail("star " + to_string(c) + " not on an H tile");
      stars->insert(c);
    }
  }
  return DiagramDocument{std::move(m), std::move(stars)};
}

std::vector<TraceEvent> trace_from_json(const Json& doc) {
  if (!doc.is_array()) fail("trace is not an array");
  std::vector<TraceEvent> out;
  for (const Json& ev : doc) {
    TraceEvent e;
    const auto kind = as<std::string>(field(ev, "kind"), "kind");
    if (kind == "droop") {
      e.kind = EventKind::droop;
      e.cut = cell_from(field(ev, "cut"), "cut");
    } else if (kind == "mini_undroop") {
      e.kind = EventKind::mini_undroop;
      e.se = cell_from(field(ev, "se"), "se");
      e.nw = cell_from(field(ev, "nw"), "nw");
    } else if (kind == "skip") {
      e.kind = EventKind::skip;
    } else {
      fail("unknown event kind \"" + kind + "\"");
    }
    e.pipe = as<int>(field(ev, "pipe"), "pipe");
    if (e.kind != EventKind::skip) {
      for (const Json& d : field(ev, "deltas")) {
        if (!d.is_array() || d.size() != 4) fail("delta is not [row, col, before, after]");
        e.deltas.push_back({{as<int>(d[0], "delta row"), as<int>(d[1], "delta col")},
                            tile_from(d[2], "delta before"),
                            tile_from(d[3], "delta after")});
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string encode(const Mbpd& m) { return to_json(m).dump(2) + "\n"; }

std::string encode(const Srpd& s) { return to_json(s).dump(2) + "\n"; }

std::string encode_trace(std::span<const TraceEvent> trace) { return to_json(trace).dump(2) + "\n"; }

DiagramDocument decode_diagram(std::string_view text) { return diagram_from_json(parse(text)); }

std::vector<TraceEvent> decode_trace(std::string_view text) { return trace_from_json(parse(text)); }

}  // namespace bumpless
