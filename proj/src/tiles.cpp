#include "bumpless/tiles.hpp"

namespace bumpless {

char tile_letter(Tile t) {
  switch (t) {
    case Tile::blank: return 'B';
    case Tile::horizontal: return 'H';
    case Tile::vertical: return 'V';
    case Tile::cross: return 'C';
    case Tile::se_elbow: return 'R';
    case Tile::nw_elbow: return 'J';
    case Tile::marked: return 'M';
  }
  return '?';
}

std::optional<Tile> tile_from_letter(char c) {
  for (Tile t : kAllTiles) {
    if (tile_letter(t) == c) return t;
  }
  return std::nullopt;
}

std::string_view side_name(Side s) {
  switch (s) {
    case kNorth: return "N";
    case kEast: return "E";
    case kSouth: return "S";
    case kWest: return "W";
  }
  return "?";
}

std::uint8_t edge_mask(Tile t) {
  switch (t) {
    case Tile::blank: return 0;
    case Tile::horizontal: return kWest | kEast;
    case Tile::vertical: return kNorth | kSouth;
    case Tile::cross: return kNorth | kEast | kSouth | kWest;
    case Tile::se_elbow: return kSouth | kEast;
    case Tile::nw_elbow:
    case Tile::marked: return kWest | kNorth;
  }
  return 0;
}

std::optional<Tile> tile_for_strands(std::span<const Strand> strands, bool mark_elbows) {
  if (strands.empty()) return Tile::blank;
  if (strands.size() == 1) {
    const Strand s = strands[0];
    if (s == kStrandH) return Tile::horizontal;
    if (s == kStrandV) return Tile::vertical;
    if (s == kStrandR) return Tile::se_elbow;
    if (s == kStrandJ) return mark_elbows ? Tile::marked : Tile::nw_elbow;
    return std::nullopt;
  }
  if (strands.size() == 2) {
    const Strand a = strands[0];
    const Strand b = strands[1];
    const bool straight = (a == kStrandH && b == kStrandV) || (a == kStrandV && b == kStrandH);
    const bool touching = (a == kStrandJ && b == kStrandR) || (a == kStrandR && b == kStrandJ);
    if (straight || touching) return Tile::cross;
  }
  return std::nullopt;
}

}  // namespace bumpless
