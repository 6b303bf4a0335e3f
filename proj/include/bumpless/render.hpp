#pragma once

#include <set>
#include <string>

#include "bumpless/grid.hpp"

namespace bumpless {

// Box-drawing picture with right labels w(1..n) and bottom labels 1..n.
// R ┌, H ─, V │, C ┼, J ┘, M ┛, blank ·; stars print as *.
std::string render_ascii(const TileGrid& g, const std::set<Cell>& stars = {});

// One polyline per pipe, a dot on every marked elbow, stars as small asterisks.
std::string render_svg(const TileGrid& g, const std::set<Cell>& stars = {});

}  // namespace bumpless
