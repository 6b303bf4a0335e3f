#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace bumpless {

// The seven tiles. Letters used in documents: B H V C R J M.
enum class Tile : std::uint8_t {
  blank,       // B
  horizontal,  // H
  vertical,    // V
  cross,       // C
  se_elbow,    // R: bottom edge to right edge
  nw_elbow,    // J: left edge to top edge
  marked,      // M: a J carrying a mark
};

inline constexpr Tile kAllTiles[] = {Tile::blank,    Tile::horizontal, Tile::vertical, Tile::cross,
                                     Tile::se_elbow, Tile::nw_elbow,   Tile::marked};

char tile_letter(Tile t);
std::optional<Tile> tile_from_letter(char c);

// Counted by the row and column weights.
constexpr bool is_weighted(Tile t) { return t == Tile::blank || t == Tile::marked; }

enum Side : std::uint8_t { kNorth = 1, kEast = 2, kSouth = 4, kWest = 8 };

std::string_view side_name(Side s);

// Bitmask of the tile edges a strand touches.
std::uint8_t edge_mask(Tile t);

// One pipe's passage through a cell, oriented in the direction of travel:
// pipes enter from the south or west and leave north or east.
struct Strand {
  Side in;
  Side out;

  friend bool operator==(const Strand&, const Strand&) = default;
};

inline constexpr Strand kStrandH{kWest, kEast};
inline constexpr Strand kStrandV{kSouth, kNorth};
inline constexpr Strand kStrandR{kSouth, kEast};
inline constexpr Strand kStrandJ{kWest, kNorth};

// Tile showing the superposition of at most two strands, or nullopt when the
// strands collide. Both {H,V} and {J,R} render as a cross; a lone J renders as
// `marked` when `mark_elbows` is set.
std::optional<Tile> tile_for_strands(std::span<const Strand> strands, bool mark_elbows);

}  // namespace bumpless
