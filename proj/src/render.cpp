#include <hexforce/render.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hexforce {

namespace {

struct Point {
  double x, y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

} // namespace

std::string render_svg(const HexSystem& hs, const std::optional<EdgeSet>& highlight,
                       double scale) {
  const double kx = std::sqrt(3.0) / 2.0 * scale, ky = scale / 2.0;
  auto at = [&](int x, int y) { return Point{x * kx, -y * ky}; };

  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const Vertex& v : hs.vertices()) {
    Point p = at(v.x, v.y);
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double pad = scale;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << fmt(minx - pad) << ' ' << fmt(miny - pad) << ' ' << fmt(maxx - minx + 2 * pad) << ' '
      << fmt(maxy - miny + 2 * pad) << "\">\n";

  out << "<g fill=\"#eef3f8\" stroke=\"none\">\n";
  for (int h = 0; h < hs.num_hexagons(); ++h) {
    out << "<polygon points=\"";
    for (Vertex c : hexagon_corners(hs.center(h))) {
      Point p = at(c.x, c.y);
      out << fmt(p.x) << ',' << fmt(p.y) << ' ';
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  for (int e = 0; e < hs.num_edges(); ++e) {
    bool hot = highlight && highlight->contains(e);
    Point a = at(hs.edge(e).u.x, hs.edge(e).u.y), b = at(hs.edge(e).v.x, hs.edge(e).v.y);
    out << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(b.y) << "\" stroke=\"" << (hot ? "#d62728" : "#444444")
        << "\" stroke-width=\"" << (hot ? 4 : 1.5) << "\"/>\n";
  }
  const double r = scale / 8.0;
  for (const Vertex& v : hs.vertices()) {
    Point p = at(v.x, v.y);
    out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"" << fmt(r)
        << "\" fill=\"" << (v.color() == Color::Black ? "black" : "white")
        << "\" stroke=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_dot(const HexSystem& hs) {
  DualGraph dual(hs);
  std::ostringstream out;
  out << "graph dual {\n";
  for (int h = 0; h < hs.num_hexagons(); ++h)
    out << "  h" << h << " [label=\"(" << hs.center(h).x << "," << hs.center(h).y << ")\"];\n";
  out << "  ext [label=\"exterior\", shape=box];\n";
  auto name = [&](int x) { return x == dual.exterior() ? std::string("ext") : "h" + std::to_string(x); };
  for (const DualEdge& d : dual.edges())
    out << "  " << name(d.a) << " -- " << name(d.b) << " [label=\"e" << d.edge << "\"];\n";
  out << "}\n";
  return out.str();
}

} // namespace hexforce
