#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tangles/errors.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

struct RenderOptions {
  int unit = 24;         // pixels per grid step
  bool rounded = false;  // replace corners with circular arcs, radius unit/3
  bool colored = false;  // evenly spaced hue per path
  double stroke_width = 2.0;
};

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

inline std::string hsv_hex(double h, double s, double v) {
  const double c = v * s;
  const double hp = h / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hp) % 6) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = v - c;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                static_cast<int>(std::lround((g + m) * 255)),
                static_cast<int>(std::lround((b + m) * 255)));
  return buf;
}

struct Point {
  double x, y;
};

}  // namespace detail

// One polyline per path, vertices only at corners and endpoints. Grid point
// (column, time) maps to x = margin + (column-1)*unit, y = margin + time*unit
// with y growing downward; diagonal steps are exact 45 degrees, so crossings
// come out at right angles. Rounded mode replaces each corner with a circular
// arc tangent to both segments.
inline std::string to_svg(const Tangle& t, const RenderOptions& opts = {}) {
  if (opts.unit < 4) throw Error("render unit must be at least 4");
  ensure_valid(t);
  const auto g = trace_paths(t);
  const double unit = opts.unit;
  const double margin = unit;
  const double width = margin * 2 + unit * (t.n() - 1);
  const double height = margin * 2 + unit * g.steps;
  const double radius = unit / 3.0;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(width) +
         "\" height=\"" + detail::fmt(height) + "\" viewBox=\"0 0 " + detail::fmt(width) + " " +
         detail::fmt(height) + "\">\n";
  for (int v = 1; v <= t.n(); ++v) {
    const auto& col = g.column[static_cast<std::size_t>(v)];
    const auto& dir = g.dir[static_cast<std::size_t>(v)];
    std::vector<detail::Point> pts;
    const auto grid = [&](int time) {
      return detail::Point{margin + unit * (col[static_cast<std::size_t>(time)] - 1),
                           margin + unit * time};
    };
    pts.push_back(grid(0));
    for (int time = 1; time < g.steps; ++time)
      if (dir[static_cast<std::size_t>(time) - 1] != dir[static_cast<std::size_t>(time)])
        pts.push_back(grid(time));
    pts.push_back(grid(g.steps));

    std::string d = "M " + detail::fmt(pts[0].x) + " " + detail::fmt(pts[0].y);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      if (!opts.rounded) {
        d += " L " + detail::fmt(pts[i].x) + " " + detail::fmt(pts[i].y);
        continue;
      }
      const double inx = pts[i].x - pts[i - 1].x, iny = pts[i].y - pts[i - 1].y;
      const double outx = pts[i + 1].x - pts[i].x, outy = pts[i + 1].y - pts[i].y;
      const double inlen = std::hypot(inx, iny), outlen = std::hypot(outx, outy);
      const double ux = inx / inlen, uy = iny / inlen;
      const double wx = outx / outlen, wy = outy / outlen;
      const double cosangle = ux * wx + uy * wy;
      const double cut = radius * std::sqrt((1 - cosangle) / (1 + cosangle));
      const int sweep = ux * wy - uy * wx > 0 ? 1 : 0;
      d += " L " + detail::fmt(pts[i].x - ux * cut) + " " + detail::fmt(pts[i].y - uy * cut);
      d += " A " + detail::fmt(radius) + " " + detail::fmt(radius) + " 0 0 " +
           std::to_string(sweep) + " " + detail::fmt(pts[i].x + wx * cut) + " " +
           detail::fmt(pts[i].y + wy * cut);
    }
    d += " L " + detail::fmt(pts.back().x) + " " + detail::fmt(pts.back().y);
    const std::string color =
        opts.colored ? detail::hsv_hex(360.0 * (v - 1) / t.n(), 0.65, 0.78) : "#333333";
    out += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           detail::fmt(opts.stroke_width) + "\" stroke-linecap=\"round\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tangles
