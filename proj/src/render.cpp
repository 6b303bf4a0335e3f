#include "bumpless/render.hpp"

#include <sstream>

namespace bumpless {

namespace {

std::string glyph(Tile t) {
  switch (t) {
    case Tile::blank: return "·";
    case Tile::horizontal: return "─";
    case Tile::vertical: return "│";
    case Tile::cross: return "┼";
    case Tile::se_elbow: return "┌";
    case Tile::nw_elbow: return "┘";
    case Tile::marked: return "┛";
  }
  return "?";
}

std::string pad(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

}  // namespace

std::string render_ascii(const TileGrid& g, const std::set<Cell>& stars) {
  const int n = g.size();
  const Permutation w = read_permutation(g).perm;
  const bool wide = n >= 10;
  std::string out;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const Tile t = g.at(r, c);
      out += stars.contains({r, c}) ? "*" : glyph(t);
      if (wide) out += (edge_mask(t) & kEast) ? "─" : " ";
    }
    out += " " + std::to_string(w(r)) + "\n";
  }
  for (int c = 1; c <= n; ++c) {
    out += wide ? pad(std::to_string(c), 2) : std::to_string(c);
  }
  out += "\n";
  return out;
}

std::string render_svg(const TileGrid& g, const std::set<Cell>& stars) {
  const int n = g.size();
  const Reading reading = read_permutation(g);
  constexpr int kCell = 40;
  constexpr int kMargin = 30;
  const int side = n * kCell + 2 * kMargin;
  auto x_of = [&](double col) { return kMargin + col * kCell; };
  auto y_of = [&](double row) { return kMargin + row * kCell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << n * kCell
      << "\" height=\"" << n * kCell << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  for (int k = 1; k < n; ++k) {
    svg << "<line x1=\"" << x_of(k) << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(k) << "\" y2=\""
        << y_of(n) << "\" stroke=\"#eee\"/>\n";
    svg << "<line x1=\"" << x_of(0) << "\" y1=\"" << y_of(k) << "\" x2=\"" << x_of(n) << "\" y2=\""
        << y_of(k) << "\" stroke=\"#eee\"/>\n";
  }
  for (int p = 1; p <= n; ++p) {
    const auto& route = reading.routes[p - 1];
    svg << "<polyline class=\"pipe\" data-pipe=\"" << p << "\" fill=\"none\" stroke=\"hsl("
        << (p - 1) * 360 / n << ",70%,40%)\" stroke-width=\"3\" points=\"" << x_of(p - 0.5) << ','
        << y_of(n);
    for (const PipeStep& s : route) {
      const double cx = s.cell.col - 0.5;
      const double cy = s.cell.row - 0.5;
      if (s.strand.in != (s.strand.out == kNorth ? kSouth : kWest)) {
        svg << ' ' << x_of(cx) << ',' << y_of(cy);
      }
    }
    const Cell last = route.back().cell;
    svg << ' ' << x_of(last.col) << ',' << y_of(last.row - 0.5) << "\"/>\n";
  }
  for (const Cell& c : g.cells_with(Tile::marked)) {
    svg << "<circle cx=\"" << x_of(c.col - 0.5) << "\" cy=\"" << y_of(c.row - 0.5)
        << "\" r=\"5\" fill=\"black\"/>\n";
  }
  for (const Cell& c : stars) {
    svg << "<text x=\"" << x_of(c.col - 0.5) << "\" y=\"" << y_of(c.row - 0.5) - 6
        << "\" text-anchor=\"middle\" font-size=\"16\">*</text>\n";
  }
  for (int k = 1; k <= n; ++k) {
    svg << "<text x=\"" << x_of(k - 0.5) << "\" y=\"" << y_of(n) + 20
        << "\" text-anchor=\"middle\" font-size=\"14\">" << k << "</text>\n";
    svg << "<text x=\"" << x_of(n) + 8 << "\" y=\"" << y_of(k - 0.5) + 5 << "\" font-size=\"14\">"
        << reading.perm(k) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bumpless
