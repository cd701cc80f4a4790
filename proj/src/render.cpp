#include "duplex/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "duplex/charges.hpp"

namespace duplex {

namespace {

constexpr int kCell = 40;     // px per cell
constexpr int kMargin = 20;
constexpr int kLabel = 18;    // label strip above each tiling panel
constexpr int kGap = 30;      // gap between the two floor panels

struct Frame {
  int minx, miny, w, h;
  explicit Frame(const BaseShape& base)
      : minx(base.min_corner().x),
        miny(base.min_corner().y),
        w(base.width()),
        h(base.height()) {}
  int col(int x) const { return x - minx; }
  int row(int y) const { return y - miny; }
};

void svg_open(std::ostringstream& os, int width, int height) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
}

void svg_base_cells(std::ostringstream& os, const BaseShape& base,
                    const Frame& fr, int ox, int oy) {
  for (const Cell& c : base.cells())
    os << "<rect x=\"" << ox + fr.col(c.x) * kCell << "\" y=\""
       << oy + fr.row(c.y) * kCell << "\" width=\"" << kCell << "\" height=\""
       << kCell << "\" fill=\"#f4f4f4\" stroke=\"#bbbbbb\"/>\n";
}

}  // namespace

std::string render_tiling_svg(const BaseShape& base, const Tiling& t) {
  Frame fr(base);
  const int panel_w = fr.w * kCell;
  const int width = 2 * panel_w + 2 * kMargin + kGap;
  const int height = fr.h * kCell + 2 * kMargin + kLabel;
  const int oy = kMargin + kLabel;
  auto ox = [&](int floor) { return kMargin + floor * (panel_w + kGap); };

  std::ostringstream os;
  svg_open(os, width, height);
  for (int f = 0; f <= 1; ++f) {
    os << "<text x=\"" << ox(f) << "\" y=\"" << kMargin + kLabel - 6
       << "\" font-family=\"monospace\" font-size=\"12\">floor " << f
       << "</text>\n";
    svg_base_cells(os, base, fr, ox(f), oy);
  }
  for (const Domino& d : t.dominoes) {
    if (d.vertical()) {
      // A vertical domino occupies its cell on both floors.
      for (int f = 0; f <= 1; ++f) {
        int x = ox(f) + fr.col(d.a.x) * kCell;
        int y = oy + fr.row(d.a.y) * kCell;
        os << "<rect x=\"" << x + 8 << "\" y=\"" << y + 8 << "\" width=\""
           << kCell - 16 << "\" height=\"" << kCell - 16
           << "\" rx=\"6\" fill=\"#b2babb\" stroke=\"#333333\"/>\n";
        os << "<circle cx=\"" << x + kCell / 2 << "\" cy=\"" << y + kCell / 2
           << "\" r=\"4\" fill=\"#333333\"/>\n";
      }
      continue;
    }
    int f = d.floor();
    int cx0 = std::min(fr.col(d.a.x), fr.col(d.b.x));
    int cy0 = std::min(fr.row(d.a.y), fr.row(d.b.y));
    bool along_x = d.axis() == Axis::X;
    int w = (along_x ? 2 : 1) * kCell - 8;
    int h = (along_x ? 1 : 2) * kCell - 8;
    const char* fill = along_x ? "#7fb3d5" : "#f5b041";
    os << "<rect x=\"" << ox(f) + cx0 * kCell + 4 << "\" y=\""
       << oy + cy0 * kCell + 4 << "\" width=\"" << w << "\" height=\"" << h
       << "\" rx=\"6\" fill=\"" << fill << "\" stroke=\"#333333\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_tiling_ascii(const BaseShape& base, const Tiling& t) {
  Frame fr(base);
  std::array<std::vector<std::string>, 2> grid;
  grid[0].assign(fr.h, std::string(fr.w, '.'));
  grid[1] = grid[0];
  for (const Domino& d : t.dominoes) {
    if (d.vertical()) {
      grid[0][fr.row(d.a.y)][fr.col(d.a.x)] = 'o';
      grid[1][fr.row(d.a.y)][fr.col(d.a.x)] = 'o';
    } else if (d.axis() == Axis::X) {
      int y = fr.row(d.a.y);
      int x0 = std::min(fr.col(d.a.x), fr.col(d.b.x));
      grid[d.floor()][y][x0] = '[';
      grid[d.floor()][y][x0 + 1] = ']';
    } else {
      int x = fr.col(d.a.x);
      int y0 = std::min(fr.row(d.a.y), fr.row(d.b.y));
      grid[d.floor()][y0][x] = 'n';
      grid[d.floor()][y0 + 1][x] = 'u';
    }
  }
  std::string out;
  for (int f = 0; f <= 1; ++f) {
    out += "floor " + std::to_string(f) + ":\n";
    for (const std::string& line : grid[f]) out += line + "\n";
  }
  return out;
}

std::string render_sock_svg(const BaseShape& base, const Sock& s,
                            bool annotate) {
  Frame fr(base);
  const int width = fr.w * kCell + 2 * kMargin;
  const int height = fr.h * kCell + 2 * kMargin;
  auto cx = [&](const Cell& v) { return kMargin + fr.col(v.x) * kCell + kCell / 2; };
  auto cy = [&](const Cell& v) { return kMargin + fr.row(v.y) * kCell + kCell / 2; };

  std::ostringstream os;
  svg_open(os, width, height);
  svg_base_cells(os, base, fr, kMargin, kMargin);

  for (const Cycle& c : s.cycles) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& u = c.vertices[i];
      const Cell& v = c.vertices[(i + 1) % n];
      const char* color = c.floors[i] == 0 ? "#1f618d" : "#c0392b";
      int x1 = cx(u), y1 = cy(u), x2 = cx(v), y2 = cy(v);
      os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\" stroke=\"" << color
         << "\" stroke-width=\"3\"/>\n";
      // Arrowhead at the midpoint, pointing from u to v.
      int mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
      int dx = (x2 - x1) / kCell, dy = (y2 - y1) / kCell;  // unit direction
      int px = -dy, py = dx;                                // unit normal
      os << "<polygon points=\"" << mx + 6 * dx << "," << my + 6 * dy << " "
         << mx - 4 * dx + 4 * px << "," << my - 4 * dy + 4 * py << " "
         << mx - 4 * dx - 4 * px << "," << my - 4 * dy - 4 * py
         << "\" fill=\"" << color << "\"/>\n";
    }
    for (const Cell& v : c.vertices)
      os << "<circle cx=\"" << cx(v) << "\" cy=\"" << cy(v)
         << "\" r=\"3\" fill=\"#111111\"/>\n";
  }
  for (const Cell& v : s.jewels)
    os << "<circle cx=\"" << cx(v) << "\" cy=\"" << cy(v)
       << "\" r=\"6\" fill=\"#111111\"/>\n";

  if (annotate) {
    for (const Cycle& c : s.cycles)
      for (const Cell& v : c.vertices)
        os << "<text x=\"" << cx(v) + 6 << "\" y=\"" << cy(v) - 6
           << "\" font-family=\"monospace\" font-size=\"9\">"
           << angle(c, v).str() << "</text>\n";
    for (const Cell& v : s.jewels) {
      std::int64_t e = 0;
      for (const Cycle& c : s.cycles) e += winding_number(c, v);
      os << "<text x=\"" << cx(v) + 6 << "\" y=\"" << cy(v) - 6
         << "\" font-family=\"monospace\" font-size=\"9\">" << e
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_sock_ascii(const BaseShape& base, const Sock& s) {
  Frame fr(base);
  std::vector<std::string> grid(2 * fr.h - 1, std::string(2 * fr.w - 1, ' '));
  for (const Cycle& c : s.cycles) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& u = c.vertices[i];
      const Cell& v = c.vertices[(i + 1) % n];
      grid[2 * fr.row(u.y)][2 * fr.col(u.x)] = '*';
      int ex = fr.col(u.x) + fr.col(v.x);  // doubled midpoint
      int ey = fr.row(u.y) + fr.row(v.y);
      char glyph;
      if (v.x > u.x) glyph = '>';
      else if (v.x < u.x) glyph = '<';
      else if (v.y > u.y) glyph = 'v';  // drawn downward
      else glyph = '^';
      grid[ey][ex] = glyph;
    }
  }
  for (const Cell& v : s.jewels) grid[2 * fr.row(v.y)][2 * fr.col(v.x)] = 'o';
  std::string out;
  for (std::string& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace duplex
