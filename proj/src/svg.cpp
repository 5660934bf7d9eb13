#include "icdraw/formats.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace icdraw {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // normalize negative zero for byte-stable output
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void line(std::ostringstream& os, const Point2& a, const Point2& b) {
  os << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
     << "\" y2=\"" << num(b.y) << "\"/>\n";
}

void dot(std::ostringstream& os, const Point2& p, double r) {
  os << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(r)
     << "\" class=\"v\"/>\n";
}

}  // namespace

std::string render_svg(const DrawingFile& f, const Graph& g) {
  std::ostringstream os;
  if (f.model == "poincare") {
    if (!f.hyp) throw std::runtime_error("render_svg: poincare model without hyp data");
    const HypDrawing& d = *f.hyp;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" "
          "width=\"600\" height=\"600\">\n";
    os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" "
          "stroke-width=\"0.004\">\n";
    os << "  <circle cx=\"0.000000\" cy=\"0.000000\" r=\"1.000000\" stroke=\"#999\"/>\n";
    for (auto [u, v] : d.g.edges) {
      Geodesic G = geodesic_through(d.coords[u], d.coords[v]);
      Point2 a = d.coords[u].euclid(), b = d.coords[v].euclid();
      if (G.is_diameter) {
        line(os, a, b);
      } else {
        // minor arc; sweep flag from the orientation around the center
        int sweep = (a - G.center).cross(b - G.center) > 0 ? 1 : 0;
        os << "  <path d=\"M " << num(a.x) << " " << num(a.y) << " A " << num(G.radius)
           << " " << num(G.radius) << " 0 0 " << sweep << " " << num(b.x) << " "
           << num(b.y) << "\"/>\n";
      }
    }
    for (const auto& p : d.coords) dot(os, p.euclid(), 0.006);
    os << "</g>\n</svg>\n";
    return os.str();
  }

  std::vector<Point2> pts = f.coords_f;
  if (f.backend == "rational") {
    pts.clear();
    for (const auto& p : f.coords_q) pts.push_back({to_double(p.x), to_double(p.y)});
  }
  double lox = 0, hix = 1, loy = 0, hiy = 1;
  if (!pts.empty()) {
    lox = hix = pts[0].x;
    loy = hiy = pts[0].y;
    for (const auto& p : pts) {
      lox = std::min(lox, p.x);
      hix = std::max(hix, p.x);
      loy = std::min(loy, p.y);
      hiy = std::max(hiy, p.y);
    }
  }
  double w = std::max(hix - lox, 1e-9), h = std::max(hiy - loy, 1e-9);
  double pad = 0.05 * std::max(w, h);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lox - pad) << " "
     << num(-(hiy + pad)) << " " << num(w + 2 * pad) << " " << num(h + 2 * pad)
     << "\" width=\"600\" height=\"600\" preserveAspectRatio=\"xMidYMid meet\">\n";
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\""
     << num(0.004 * std::max(w, h)) << "\">\n";
  for (auto [u, v] : g.edges) line(os, pts[u], pts[v]);
  for (const auto& p : pts) dot(os, p, 0.006 * std::max(w, h));
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace icdraw
