#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "hexcount/geometry.hpp"

namespace hexcount {

struct SvgStyle {
  /// Fill rhombi by kind (top dark, column walls mid grey, row walls white).
  bool shade = false;
  /// Output pixels per unit edge (only affects width/height attributes).
  double scale = 40.0;
  double margin = 0.5;
  double stroke_width = 0.04;
  std::string stroke = "#000000";
  std::string fill = "#ffffff";
};

namespace detail {

struct SvgPoint {
  double x;
  double y;
};

// Same view as the printed figures: the lattice turned by 210 degrees, so
// P_0..P_{a+1} run down the left side and the r-notch sits at the bottom.
inline SvgPoint project(const VertexPos& p) {
  const double half_root3 = std::sqrt(3.0) / 2.0;
  return {-half_root3 * p.u, 0.5 * p.u + p.v};
}

inline std::string fixed6(double value) {
  if (std::fabs(value) < 5e-7) value = 0.0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

inline const char* shade_of(RhombusKind kind) {
  switch (kind) {
    case RhombusKind::top:
      return "#333333";
    case RhombusKind::column_wall:
      return "#999999";
    case RhombusKind::row_wall:
      break;
  }
  return "#ffffff";
}

struct SvgPolygon {
  std::vector<VertexPos> corners;
  std::string fill;
};

inline std::string render_polygons(const std::vector<SvgPolygon>& polygons, const SvgStyle& style) {
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  for (const auto& poly : polygons) {
    for (const auto& c : poly.corners) {
      const auto p = project(c);
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  if (polygons.empty()) min_x = min_y = max_x = max_y = 0.0;
  const double width = max_x - min_x + 2 * style.margin;
  const double height = max_y - min_y + 2 * style.margin;
  const double dx = style.margin - min_x;
  const double dy = style.margin - min_y;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed6(width * style.scale) +
         "\" height=\"" + fixed6(height * style.scale) + "\" viewBox=\"0.000000 0.000000 " + fixed6(width) + " " +
         fixed6(height) + "\">\n";
  out += "<g stroke=\"" + style.stroke + "\" stroke-width=\"" + fixed6(style.stroke_width) +
         "\" stroke-linejoin=\"round\">\n";
  for (const auto& poly : polygons) {
    out += "<polygon points=\"";
    for (std::size_t k = 0; k < poly.corners.size(); ++k) {
      const auto p = project(poly.corners[k]);
      if (k) out += ' ';
      out += fixed6(p.x + dx) + "," + fixed6(p.y + dy);
    }
    out += "\" fill=\"" + poly.fill + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace detail

/// One polygon per rhombus, in canonical rhombus order.
inline std::string render_svg(const Tiling& tiling, const SvgStyle& style = {}) {
  Tiling sorted = tiling;
  sorted.canonicalize();
  std::vector<detail::SvgPolygon> polygons;
  for (const auto& r : sorted.rhombi) {
    polygons.push_back({r.outline(), style.shade ? detail::shade_of(r.kind()) : style.fill});
  }
  return detail::render_polygons(polygons, style);
}

/// One polygon per unit triangle of the (untiled) region.
inline std::string render_svg(const Region& region, const SvgStyle& style = {}) {
  std::vector<detail::SvgPolygon> polygons;
  for (const auto& cell : region.cells) polygons.push_back({corners(cell), style.fill});
  return detail::render_polygons(polygons, style);
}

/// Number of <polygon elements in an SVG document.
inline std::size_t count_polygons(const std::string& svg) {
  std::size_t n = 0;
  for (auto pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1)) ++n;
  return n;
}

}  // namespace hexcount
