#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bumpless/codec.hpp"
#include "bumpless/render.hpp"
#include "support/fixtures.hpp"

using namespace bumpless;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("diagram documents round-trip") {
  const std::vector<Mbpd> samples = {rothe_pipedream(parse_permutation("251634")),
                                     Mbpd::from_grid(fixtures::p2_251634()),
                                     Mbpd::from_grid(fixtures::dhat_big12())};
  for (const Mbpd& m : samples) {
    const std::string text = encode(m);
    const DiagramDocument back = decode_diagram(text);
    CHECK(back.diagram == m);
    CHECK_FALSE(back.stars);
    CHECK(encode(back.diagram) == text);
  }
}

TEST_CASE("document layout") {
  const Json doc = to_json(rothe_pipedream(parse_permutation("251634")));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "perm", "tiles", "rwt", "cwt"});
  REQUIRE(doc["tiles"].size() == 6);
  for (const auto& row : doc["tiles"]) CHECK(row.get<std::string>().size() == 6);
  CHECK(doc["perm"] == Json::array({2, 5, 1, 6, 3, 4}));
}

TEST_CASE("snow Rothe documents keep their stars") {
  const Srpd s = build_srpd(parse_permutation("251634"));
  const DiagramDocument back = decode_diagram(encode(s));
  REQUIRE(back.stars);
  CHECK(*back.stars == s.stars);
  CHECK(back.diagram.grid() == s.grid);
}

TEST_CASE("tampered documents are rejected") {
  Json doc = to_json(rothe_pipedream(parse_permutation("21")));
  Json bad_letter = doc;
  bad_letter["tiles"][1] = "RQ";
  CHECK_THROWS_WITH_AS(diagram_from_json(bad_letter), doctest::Contains("(2,2)"), Error);

  Json bad_perm = doc;
  bad_perm["perm"] = Json::array({1, 2});
  CHECK_THROWS_AS(diagram_from_json(bad_perm), Error);

  Json bad_weight = doc;
  bad_weight["rwt"] = Json::array({0, 0});
  CHECK_THROWS_AS(diagram_from_json(bad_weight), Error);

  Json invalid = doc;
  invalid["tiles"] = Json::array({"BH", "RC"});
  CHECK_THROWS_AS(diagram_from_json(invalid), Error);

  CHECK_THROWS_AS(decode_diagram("{\"n\": 2"), Error);
  try {
    decode_diagram("[]");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::decode_error);
  }
}

TEST_CASE("trace documents round-trip") {
  const MaximalResult r = run_maximal(parse_permutation("5241736"));
  const auto back = decode_trace(encode_trace(r.trace));
  CHECK(back == r.trace);
  const Json doc = to_json(r.trace);
  CHECK(doc[0]["kind"] == "skip");
  bool droop_seen = false;
  for (const Json& e : doc) {
    if (e["kind"] != "droop") continue;
    droop_seen = true;
    CHECK(e["cut"].size() == 2);
    CHECK(e["deltas"][0].size() == 4);
  }
  CHECK(droop_seen);
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(rothe_pipedream(Permutation::identity(2)).grid()) == "┌─ 1\n│┌ 2\n12\n");
  const std::string p2 = render_ascii(fixtures::p2_251634());
  CHECK(occurrences(p2, "┛") == 1);
  const auto lines = [&] {
    std::vector<std::string> out;
    std::string line;
    for (char ch : p2) {
      if (ch == '\n') {
        out.push_back(line);
        line.clear();
      } else {
        line += ch;
      }
    }
    return out;
  }();
  REQUIRE(lines.size() == 7);
  // the dot sits where pipe 1 turns up in column 4, row 4
  std::vector<std::string> glyphs;
  for (std::size_t k = 0; k < lines[3].size();) {
    const auto lead = static_cast<unsigned char>(lines[3][k]);
    const std::size_t len = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
    glyphs.push_back(lines[3].substr(k, len));
    k += len;
  }
  CHECK(glyphs[3] == "┛");
  const Srpd s = build_srpd(parse_permutation("251634"));
  CHECK(occurrences(render_ascii(s.grid, s.stars), "*") == 3);
  const std::string wide = render_ascii(fixtures::dhat_big12());
  CHECK(wide.find(" 9101112\n") != std::string::npos);
}

TEST_CASE("svg rendering") {
  const std::string svg = render_svg(fixtures::p2_251634());
  CHECK(occurrences(svg, "<polyline") == 6);
  CHECK(occurrences(svg, "<circle") == 1);
  CHECK(svg.find("<svg") == 0);
  const Srpd s = build_srpd(parse_permutation("251634"));
  CHECK(occurrences(render_svg(s.grid, s.stars), ">*</text>") == 3);
  CHECK(occurrences(render_svg(fixtures::dhat_big12()), "<circle") == 17);
}
