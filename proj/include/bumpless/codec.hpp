#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bumpless/grid.hpp"
#include "bumpless/maximal.hpp"

namespace bumpless {

using Json = nlohmann::ordered_json;

// {"n", "perm", "tiles", "stars"?, "rwt", "cwt"} in that order.
Json to_json(const Mbpd& m);
Json to_json(const Srpd& s);
Json to_json(std::span<const TraceEvent> trace);

struct DiagramDocument {
  Mbpd diagram;
  std::optional<std::set<Cell>> stars;
};

// Revalidates everything: tile alphabet, grid validity, and consistency of
// "perm", "rwt", "cwt" and "stars" with the tiles. Throws Errc::decode_error.
DiagramDocument diagram_from_json(const Json& doc);
std::vector<TraceEvent> trace_from_json(const Json& doc);

std::string encode(const Mbpd& m);
std::string encode(const Srpd& s);
std::string encode_trace(std::span<const TraceEvent> trace);

DiagramDocument decode_diagram(std::string_view text);
std::vector<TraceEvent> decode_trace(std::string_view text);

}  // namespace bumpless
