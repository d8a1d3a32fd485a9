#pragma once

// Turns the rhombus drawing commands of the two reference pictures back into
// lattice rhombi, so tests can compare against the picture itself.

#include <algorithm>
#include <cmath>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hexcount/geometry.hpp"

namespace figures {

using Corners = std::set<hexcount::VertexPos>;

// Drawing commands of the full-hexagon tiling with fixed tiles
// (parameters 2,1,1,2,2,1), relative to its segment origin.
inline const char* const kFixedTileTiling = R"(
\RdA \RdB \RdA \RdA \RdB \RdB
\move (-0.866025403784439 -.5)
\RdB \RdA \RdA \RdB \RdB \RdA
\move(-0.866025403784439 -2.5)
\RdB \RdA \RdB
\move(.866025 .5)
\RdA \RdB \RdA \RdA \RdB \RdB
\move(-1.73205 -1)
\RdB\RdA \RdB\RdA \RdB\RdA
\move(2.598 .5) \RdC \RdC
\move(-1.73205 -2) \RdC
\move(-1.73205 -3) \RdC
\move(1.73205 -2) \RdC
\move(-.866025 -3.5) \RdC
)";

// The three fixed tiles of the same picture, drawn as explicit outlines.
inline const std::vector<std::vector<std::pair<double, double>>> kFixedTileOutlines = {
    {{1.73205, 0}, {1.73205, -1}, {2.598076, -0.5}, {2.598076, 0.5}},
    {{0, -2}, {-0.866025, -1.5}, {-1.73205, -2}, {-0.866025, -2.5}},
    {{1.73205, -3}, {1.73205, -4}, {2.598076, -4.5}, {2.598076, -3.5}},
};

// Drawing commands of the notched-hexagon tiling (same parameters) whose
// path family is drawn next to it.
inline const char* const kNotchedTiling = R"(
\move(0 0)
\RhombusA \RhombusB \RhombusB \RhombusA \RhombusA
\move (-0.866025403784439 -0.5)
\RhombusB \RhombusA \RhombusB \RhombusB \RhombusA
 \move (-0.866025403784439 -2.5)
\RhombusB \RhombusB \RhombusA
 \move (1.732050807568877 -1)
\RhombusA \RhombusB \RhombusA
\move(0.866025403784439 -2.5)
\RhombusC
\move(3.464101615137755 -1)
\RhombusC
)";

// The notched region (parameters 2,1,1,2,2,1) drawn triangle by triangle,
// followed by the dotted rhombi that the fixed tiles force.
inline const char* const kNotchedRegion = R"(
\rhombus \ldreieck \rhombus \rhombus \ldreieck
\move (-0.866025403784439 -.5)
 \rhombus \rhombus \rhombus \rhombus \rhombus
\move (-0.866025403784439 -.5)
\rdreieck \rhombus \rhombus \rhombus \rhombus
\move(-0.866025403784439 -2.5)
\rhombus \rhombus \ldreieck
\move(-0.866025403784439 -2.5)
\rdreieck \rhombus \rhombus
\move (-0.866025403784439 -3.5)
\rdreieck \rhombus
)";

inline const char* const kForcedStrips = R"(
\move(.866025 .5) \RhombusA
\move(-1.73205 -1) \RhombusB
\move(2.598 .5) \RhombusC \RhombusC
\move(-1.73205 -2) \RhombusC
\move(-1.73205 -3) \RhombusC
\move(0 -5) \RhombusA
\move(.866025 -4.5) \RhombusA
\move(2.598 -3.5) \RhombusB
\move(3.464 -3) \RhombusB
)";

inline constexpr double kHalfRoot3 = 0.866025403784439;

// Picture (x,y) -> lattice vertex. The pictures show the lattice turned by
// 210 degrees: x = -(sqrt3/2) u, y = -u/2 - v; their origin is lattice (2,-3).
inline hexcount::VertexPos to_lattice(double x, double y) {
  const double u = -x / kHalfRoot3;
  const double v = -y - u / 2.0;
  const double ur = std::round(u), vr = std::round(v);
  if (std::fabs(u - ur) > 2e-3 || std::fabs(v - vr) > 2e-3) {
    throw std::runtime_error("picture point off the lattice");
  }
  return {static_cast<int>(ur) + 2, static_cast<int>(vr) - 3};
}

inline Corners corners_of(const std::vector<std::pair<double, double>>& outline) {
  Corners out;
  for (const auto& [x, y] : outline) out.insert(to_lattice(x, y));
  return out;
}

/// Replays the turtle macros: kind A, B, C draw a rhombus from the current
/// point and leave the pen at a fixed corner.
inline std::vector<Corners> decode(const std::string& commands) {
  static const std::regex token(R"(\\move\s*\(\s*([-0-9.]+)\s+([-0-9.]+)\s*\)|\\(?:Rd|Rhombus)([ABC]))");
  const double S = kHalfRoot3;
  double x = 0, y = 0;
  std::vector<Corners> out;
  for (auto it = std::sregex_iterator(commands.begin(), commands.end(), token); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[1].matched) {
      x = std::stod(m[1].str());
      y = std::stod(m[2].str());
      continue;
    }
    std::vector<std::pair<double, double>> outline;
    switch (m[3].str()[0]) {
      case 'A':
        outline = {{x, y}, {x + S, y + 0.5}, {x + 2 * S, y}, {x + S, y - 0.5}};
        x += S;
        y -= 0.5;
        break;
      case 'B':
        outline = {{x, y}, {x + S, y + 0.5}, {x + S, y - 0.5}, {x, y - 1}};
        y -= 1;
        break;
      default:
        outline = {{x, y}, {x + S, y - 0.5}, {x + S, y - 1.5}, {x, y - 1}};
        x += S;
        y -= 0.5;
        break;
    }
    out.push_back(corners_of(outline));
  }
  return out;
}

inline hexcount::TriCell cell_of(const Corners& c) {
  if (c.size() != 3) throw std::runtime_error("not a triangle");
  int mu = c.begin()->u, mv = c.begin()->v;
  for (const auto& p : c) {
    mu = std::min(mu, p.u);
    mv = std::min(mv, p.v);
  }
  return c.count({mu, mv}) ? hexcount::up_cell(mu, mv) : hexcount::down_cell(mu, mv);
}

/// Replays the triangle macros: a split rhombus (two triangles), a
/// left-pointing and a right-pointing single triangle.
inline std::set<hexcount::TriCell> decode_triangles(const std::string& commands) {
  static const std::regex token(R"(\\move\s*\(\s*([-0-9.]+)\s+([-0-9.]+)\s*\)|\\(rhombus|ldreieck|rdreieck)\b)");
  const double S = kHalfRoot3;
  double x = 0, y = 0;
  std::set<hexcount::TriCell> out;
  for (auto it = std::sregex_iterator(commands.begin(), commands.end(), token); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[1].matched) {
      x = std::stod(m[1].str());
      y = std::stod(m[2].str());
      continue;
    }
    const std::string kind = m[3].str();
    if (kind == "rhombus") {
      out.insert(cell_of(corners_of({{x, y}, {x + S, y + 0.5}, {x + S, y - 0.5}})));
      out.insert(cell_of(corners_of({{x + S, y + 0.5}, {x + 2 * S, y}, {x + S, y - 0.5}})));
      x += S;
      y -= 0.5;
    } else if (kind == "ldreieck") {
      out.insert(cell_of(corners_of({{x, y}, {x + S, y + 0.5}, {x + S, y - 0.5}})));
      x += S;
      y -= 0.5;
    } else {
      out.insert(cell_of(corners_of({{x, y}, {x + S, y - 0.5}, {x, y - 1}})));
      y -= 1;
    }
  }
  return out;
}

inline Corners corners_of(const hexcount::Rhombus& r) {
  const auto ring = r.outline();
  return Corners(ring.begin(), ring.end());
}

inline std::set<Corners> corner_sets(const hexcount::Tiling& t) {
  std::set<Corners> out;
  for (const auto& r : t.rhombi) out.insert(corners_of(r));
  return out;
}

inline bool contains_all(const hexcount::Tiling& t, const std::vector<Corners>& drawn) {
  const auto have = corner_sets(t);
  for (const auto& c : drawn)
    if (!have.count(c)) return false;
  return true;
}

}  // namespace figures
