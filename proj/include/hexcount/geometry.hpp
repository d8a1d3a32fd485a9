#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <iterator>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hexcount/exact.hpp"
#include "hexcount/lgv.hpp"
#include "hexcount/oracle.hpp"
#include "hexcount/params.hpp"

namespace hexcount {

// Triangular lattice in axial coordinates: vertex (u,v) sits at
// u*(1,0) + v*(1/2, sqrt(3)/2). up(u,v) has corners (u,v),(u+1,v),(u,v+1);
// down(u,v) has corners (u+1,v),(u,v+1),(u+1,v+1).
//
// Cubes live in an A x B x C box (x = row, y = column, z = height of a
// plane-partition entry) and are seen along (1,1,1): P(x,y,z) = (x-y, y-z).

enum class Orientation : std::uint8_t { up, down };

struct TriCell {
  int u = 0;
  int v = 0;
  Orientation orientation = Orientation::up;

  friend auto operator<=>(const TriCell&, const TriCell&) = default;
};

inline TriCell up_cell(int u, int v) { return {u, v, Orientation::up}; }
inline TriCell down_cell(int u, int v) { return {u, v, Orientation::down}; }

inline std::string to_string(const TriCell& t) {
  return std::string(t.orientation == Orientation::up ? "up(" : "down(") + std::to_string(t.u) + "," +
         std::to_string(t.v) + ")";
}

struct VertexPos {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const VertexPos&, const VertexPos&) = default;
};

inline std::vector<VertexPos> corners(const TriCell& t) {
  if (t.orientation == Orientation::up) return {{t.u, t.v}, {t.u + 1, t.v}, {t.u, t.v + 1}};
  return {{t.u + 1, t.v}, {t.u, t.v + 1}, {t.u + 1, t.v + 1}};
}

/// top: horizontal cube face; column_wall: face normal to y; row_wall: face normal to x.
enum class RhombusKind : std::uint8_t { top, column_wall, row_wall };

inline const char* to_string(RhombusKind kind) {
  switch (kind) {
    case RhombusKind::top:
      return "top";
    case RhombusKind::column_wall:
      return "column_wall";
    case RhombusKind::row_wall:
      return "row_wall";
  }
  return "?";
}

/// Two edge-adjacent unit triangles.
struct Rhombus {
  TriCell up;
  TriCell down;

  friend auto operator<=>(const Rhombus&, const Rhombus&) = default;

  /// Relative to up(p,q) the partner is down(p-1,q), down(p,q) or down(p,q-1).
  RhombusKind kind() const {
    if (down.u == up.u - 1 && down.v == up.v) return RhombusKind::top;
    if (down.u == up.u && down.v == up.v) return RhombusKind::column_wall;
    return RhombusKind::row_wall;
  }

  /// Corners in cyclic order.
  std::vector<VertexPos> outline() const {
    const auto a = corners(up);
    const auto b = corners(down);
    std::vector<VertexPos> shared, only_up, only_down;
    for (const auto& p : a) (std::find(b.begin(), b.end(), p) != b.end() ? shared : only_up).push_back(p);
    for (const auto& p : b)
      if (std::find(a.begin(), a.end(), p) == a.end()) only_down.push_back(p);
    return {only_up[0], shared[0], only_down[0], shared[1]};
  }
};

inline Rhombus make_rhombus(TriCell first, TriCell second) {
  if (first.orientation == second.orientation) {
    throw StructuralError("rhombus needs one up and one down triangle: " + to_string(first) + ", " +
                          to_string(second));
  }
  if (first.orientation == Orientation::down) std::swap(first, second);
  const bool adjacent = (second.u == first.u - 1 && second.v == first.v) ||
                        (second.u == first.u && second.v == first.v) ||
                        (second.u == first.u && second.v == first.v - 1);
  if (!adjacent) {
    throw StructuralError("triangles " + to_string(first) + " and " + to_string(second) + " are not adjacent");
  }
  return {first, second};
}

inline std::string to_string(const Rhombus& r) {
  return std::string(to_string(r.kind())) + "[" + to_string(r.up) + "+" + to_string(r.down) + "]";
}

/// Unit cube face; (x,y,z) is its corner nearest the origin.
struct CubeFace {
  RhombusKind kind = RhombusKind::top;
  int x = 0;
  int y = 0;
  int z = 0;

  friend auto operator<=>(const CubeFace&, const CubeFace&) = default;
};

inline Rhombus rhombus_of(const CubeFace& f) {
  const int u = f.x - f.y;
  const int v = f.y - f.z;
  switch (f.kind) {
    case RhombusKind::top:
      return {up_cell(u, v), down_cell(u - 1, v)};
    case RhombusKind::column_wall:
      return {up_cell(u, v - 1), down_cell(u, v - 1)};
    case RhombusKind::row_wall:
      break;
  }
  return {up_cell(u - 1, v), down_cell(u - 1, v - 1)};
}

struct Region {
  std::set<TriCell> cells;
  HexagonParams params;

  bool contains(const TriCell& t) const { return cells.count(t) != 0; }
  std::size_t size() const { return cells.size(); }
};

/// Rhombi kept sorted, so equal tilings compare and serialize equal.
struct Tiling {
  std::vector<Rhombus> rhombi;

  void canonicalize() { std::sort(rhombi.begin(), rhombi.end()); }
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

inline Tiling make_tiling(std::vector<Rhombus> rhombi) {
  Tiling t{std::move(rhombi)};
  t.canonicalize();
  return t;
}

/// Canonical one-line serialization ("u v k" per rhombus, k the kind index).
inline std::string serialize(const Tiling& t) {
  std::string out;
  for (const auto& r : t.rhombi) {
    if (!out.empty()) out += ';';
    out += std::to_string(r.up.u) + ' ' + std::to_string(r.up.v) + ' ' +
           std::to_string(static_cast<int>(r.kind()));
  }
  return out;
}

/// Disjoint rhombi covering exactly the cells of `region`.
inline bool is_perfect_matching(const Tiling& t, const Region& region) {
  std::set<TriCell> used;
  for (const auto& r : t.rhombi) {
    try {
      make_rhombus(r.up, r.down);
    } catch (const StructuralError&) {
      return false;
    }
    for (const auto& cell : {r.up, r.down}) {
      if (!region.contains(cell) || !used.insert(cell).second) return false;
    }
  }
  return used.size() == region.size();
}

// ---- plane partitions and the full hexagon ----

/// Visible cube faces of the stack `pp` inside a rows x cols x height box,
/// with the floor and the two back walls included.
inline std::vector<CubeFace> visible_faces(const PlanePartition& pp, int height) {
  const int A = pp.rows, B = pp.cols, C = height;
  auto H = [&](int x, int y) {
    if (x < 0 || y < 0) return C;
    if (x >= A || y >= B) return 0;
    return pp.at(x, y);
  };
  std::vector<CubeFace> faces;
  for (int x = 0; x < A; ++x)
    for (int y = 0; y < B; ++y) faces.push_back({RhombusKind::top, x, y, pp.at(x, y)});
  for (int x = 0; x < A; ++x)
    for (int y = 0; y <= B; ++y)
      for (int z = H(x, y); z < H(x, y - 1); ++z) faces.push_back({RhombusKind::column_wall, x, y, z});
  for (int x = 0; x <= A; ++x)
    for (int y = 0; y < B; ++y)
      for (int z = H(x, y); z < H(x - 1, y); ++z) faces.push_back({RhombusKind::row_wall, x, y, z});
  return faces;
}

inline Tiling plane_partition_to_tiling(const PlanePartition& pp, int height) {
  if (!is_plane_partition(pp, height)) throw DomainError("not a plane partition with entries <= height");
  std::vector<Rhombus> rhombi;
  for (const auto& f : visible_faces(pp, height)) rhombi.push_back(rhombus_of(f));
  return make_tiling(std::move(rhombi));
}

/// Semiregular hexagon with sides A, B, C (the projection of the box).
inline Region build_full_hexagon(int A, int B, int C) {
  if (A < 0 || B < 0 || C < 0) throw DomainError("hexagon sides must be >= 0");
  Region region;
  region.params = {std::max(A - 2, 0), std::max(B - 2, 0), std::max(C - 2, 0), 1, 1, 1};
  for (const auto& r : plane_partition_to_tiling(PlanePartition(A, B), C).rhombi) {
    region.cells.insert(r.up);
    region.cells.insert(r.down);
  }
  return region;
}

namespace detail {

// 3D unit step for each lattice edge direction.
inline std::optional<std::array<int, 3>> lift_step(int du, int dv) {
  if (du == 1 && dv == 0) return std::array<int, 3>{1, 0, 0};
  if (du == -1 && dv == 1) return std::array<int, 3>{0, 1, 0};
  if (du == 0 && dv == -1) return std::array<int, 3>{0, 0, 1};
  if (du == -1 && dv == 0) return std::array<int, 3>{-1, 0, 0};
  if (du == 1 && dv == -1) return std::array<int, 3>{0, -1, 0};
  if (du == 0 && dv == 1) return std::array<int, 3>{0, 0, -1};
  return std::nullopt;
}

}  // namespace detail

/// Reads the cube stack off a tiling of the full A x B x C hexagon by lifting
/// every rhombus side to a unit step in space (anchored at the fixed corner
/// (A,0,0)); each top rhombus then gives one entry.
inline PlanePartition tiling_to_plane_partition(const Tiling& t, int A, int B, int C) {
  const Region hex = build_full_hexagon(A, B, C);
  if (!is_perfect_matching(t, hex)) {
    throw DomainError("tiling does not cover the " + std::to_string(A) + "x" + std::to_string(B) + "x" +
                      std::to_string(C) + " hexagon");
  }
  std::map<VertexPos, std::vector<VertexPos>> sides;
  for (const auto& r : t.rhombi) {
    const auto ring = r.outline();
    for (std::size_t k = 0; k < 4; ++k) {
      sides[ring[k]].push_back(ring[(k + 1) % 4]);
      sides[ring[(k + 1) % 4]].push_back(ring[k]);
    }
  }
  std::map<VertexPos, std::array<int, 3>> lifted;
  PlanePartition pp(A, B);
  if (A == 0 || B == 0) return pp;
  const VertexPos anchor{A, 0};
  lifted[anchor] = {A, 0, 0};
  std::vector<VertexPos> stack{anchor};
  while (!stack.empty()) {
    const VertexPos at = stack.back();
    stack.pop_back();
    const auto here = lifted.at(at);
    for (const auto& next : sides[at]) {
      const auto step = detail::lift_step(next.u - at.u, next.v - at.v);
      if (!step) throw StructuralError("rhombus side is not a lattice edge");
      const std::array<int, 3> there{here[0] + (*step)[0], here[1] + (*step)[1], here[2] + (*step)[2]};
      auto [it, inserted] = lifted.emplace(next, there);
      if (inserted) {
        stack.push_back(next);
      } else if (it->second != there) {
        throw StructuralError("tiling has no consistent height function");
      }
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(A * B), false);
  for (const auto& r : t.rhombi) {
    if (r.kind() != RhombusKind::top) continue;
    const auto [x, y, z] = lifted.at(VertexPos{r.up.u, r.up.v});
    if (x < 0 || x >= A || y < 0 || y >= B || z < 0 || z > C || seen[static_cast<std::size_t>(x * B + y)]) {
      throw StructuralError("top face lifted outside the box");
    }
    seen[static_cast<std::size_t>(x * B + y)] = true;
    pp.at(x, y) = z;
  }
  return pp;
}

// ---- the notched hexagon ----

/// Rhombi that every tiling of the (a+2,b+2,c+2) hexagon with the three
/// fixed tiles must contain: the fixed tiles themselves plus the strips of
/// tiles they force along the borders they touch.
///
/// In cube terms (A=a+2, B=b+2, C=c+2):
///  - r: along the floor edge y = B the first A-r cells of the last column
///    show walls, the rest show floor; fixed tile = row wall at (A-r, B-1, 0).
///    Equivalently: exactly r zeros in the last column.
///  - t: along the edge x = A of the first column the wall stands c+2-t high;
///    fixed tile = top at (A-1, 0, C-t). Equivalently: bottom-left entry C-t.
///  - s: along the top edge of the first row the first B-s cells are full;
///    fixed tile = column wall at (0, B-s, C-1). Equivalently: exactly B-s
///    entries equal to C in the first row.
/// Positions therefore count from the corner shared with the previous side
/// going around the hexagon (r from the floor corner of the last column,
/// s from the back corner of the first row, t upward from the floor).
inline std::vector<CubeFace> forced_faces(const HexagonParams& p) {
  validate(p);
  const int A = p.a + 2, B = p.b + 2, C = p.c + 2;
  std::vector<CubeFace> faces;
  for (int x = 0; x < A; ++x) {
    faces.push_back(x < A - p.r ? CubeFace{RhombusKind::column_wall, x, B, 0}
                                : CubeFace{RhombusKind::top, x, B - 1, 0});
  }
  faces.push_back({RhombusKind::row_wall, A - p.r, B - 1, 0});
  for (int z = C - p.t; z < C; ++z) faces.push_back({RhombusKind::column_wall, A - 1, 0, z});
  for (int z = 0; z < C - p.t; ++z) faces.push_back({RhombusKind::row_wall, A, 0, z});
  faces.push_back({RhombusKind::top, A - 1, 0, C - p.t});
  for (int y = 0; y < B; ++y) {
    faces.push_back(y < B - p.s ? CubeFace{RhombusKind::top, 0, y, C}
                                : CubeFace{RhombusKind::row_wall, 0, y, C - 1});
  }
  faces.push_back({RhombusKind::column_wall, 0, B - p.s, C - 1});
  return faces;
}

/// The three fixed tiles only (r, t, s order).
inline std::vector<Rhombus> fixed_tiles(const HexagonParams& p) {
  validate(p);
  const int A = p.a + 2, B = p.b + 2, C = p.c + 2;
  return {rhombus_of({RhombusKind::row_wall, A - p.r, B - 1, 0}),
          rhombus_of({RhombusKind::top, A - 1, 0, C - p.t}),
          rhombus_of({RhombusKind::column_wall, 0, B - p.s, C - 1})};
}

inline std::vector<Rhombus> forced_tiles(const HexagonParams& p) {
  std::vector<Rhombus> out;
  for (const auto& f : forced_faces(p)) out.push_back(rhombus_of(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The (a+2,b+2,c+2) hexagon with the forced strips removed: a hexagon with
/// sides a, c+3, b, a+3, c, b+3 missing one border triangle on each long
/// side (see forced_faces for how r, s, t are counted).
inline Region build_region(const HexagonParams& p) {
  validate(p);
  Region region = build_full_hexagon(p.a + 2, p.b + 2, p.c + 2);
  region.params = p;
  for (const auto& r : forced_tiles(p)) {
    region.cells.erase(r.up);
    region.cells.erase(r.down);
  }
  return region;
}

/// Adds the forced strips back, giving a tiling of the full hexagon.
inline Tiling complete_with_forced_tiles(const Tiling& t, const HexagonParams& p) {
  std::vector<Rhombus> all = t.rhombi;
  const auto forced = forced_tiles(p);
  all.insert(all.end(), forced.begin(), forced.end());
  return make_tiling(std::move(all));
}

/// Plane partition of a notched-hexagon tiling (via the full hexagon).
inline PlanePartition notched_tiling_to_plane_partition(const Tiling& t, const HexagonParams& p) {
  return tiling_to_plane_partition(complete_with_forced_tiles(t, p), p.a + 2, p.b + 2, p.c + 2);
}

/// Inverse of notched_tiling_to_plane_partition; the partition must satisfy
/// satisfies_border_constraints.
inline Tiling plane_partition_to_notched_tiling(const PlanePartition& pp, const HexagonParams& p) {
  validate(p);
  if (!satisfies_border_constraints(pp, p) || !is_plane_partition(pp, p.c + 2)) {
    throw DomainError("plane partition violates the border constraints of " + to_string(p));
  }
  const Tiling full = plane_partition_to_tiling(pp, p.c + 2);
  const auto forced = forced_tiles(p);
  std::vector<Rhombus> rest;
  std::set_difference(full.rhombi.begin(), full.rhombi.end(), forced.begin(), forced.end(),
                      std::back_inserter(rest));
  if (rest.size() + forced.size() != full.rhombi.size()) {
    throw StructuralError("forced tiles missing from the tiling of " + to_string(p));
  }
  return make_tiling(std::move(rest));
}

// ---- paths <-> tilings ----
//
// A path point (X,Y) is the lattice edge from (u,v) to (u+1,v) with
// u = a-X, v = X-Y+1. From that edge a path crosses the rhombus containing
// up(u,v): a top rhombus is a step to (X+1,Y), a column wall a step to
// (X,Y-1). Row walls carry no path.

namespace detail {

inline VertexPos edge_of(const LatticePoint& pt, int a) {
  return {a - static_cast<int>(pt.x), static_cast<int>(pt.x - pt.y) + 1};
}

inline LatticePoint point_of(const VertexPos& e, int a) {
  const std::int64_t x = a - e.u;
  return {x, x + 1 - e.v};
}

}  // namespace detail

inline Tiling paths_to_tiling(const PathFamily& family, const Region& region) {
  const HexagonParams& p = region.params;
  const PointConfiguration cfg = build_point_configuration(p);
  if (!is_valid_family(family, cfg)) {
    throw StructuralError("path family is not a nonintersecting family for " + to_string(p));
  }
  std::set<TriCell> free = region.cells;
  std::vector<Rhombus> rhombi;
  auto take = [&](const TriCell& cell) {
    if (free.erase(cell) == 0) {
      throw StructuralError("path family uses " + to_string(cell) + " outside the region or twice");
    }
  };
  for (const auto& path : family.paths) {
    for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
      const VertexPos e = detail::edge_of(path.vertices[k], p.a);
      const bool horizontal = path.vertices[k + 1].x == path.vertices[k].x + 1;
      const Rhombus r{up_cell(e.u, e.v), horizontal ? down_cell(e.u - 1, e.v) : down_cell(e.u, e.v)};
      take(r.up);
      take(r.down);
      rhombi.push_back(r);
    }
    const VertexPos last = detail::edge_of(path.vertices.back(), p.a);
    if (region.contains(up_cell(last.u, last.v))) {
      throw StructuralError("path ends inside the region");
    }
  }
  // Whatever is left must pair into row walls.
  while (!free.empty()) {
    const TriCell cell = *free.begin();
    const Rhombus r = cell.orientation == Orientation::up ? Rhombus{cell, down_cell(cell.u, cell.v - 1)}
                                                          : Rhombus{up_cell(cell.u, cell.v + 1), cell};
    if (!free.count(r.up) || !free.count(r.down)) {
      throw StructuralError("cells left by the paths cannot be paired at " + to_string(cell));
    }
    free.erase(r.up);
    free.erase(r.down);
    rhombi.push_back(r);
  }
  return make_tiling(std::move(rhombi));
}

/// Follows each path from its start edge through top and column-wall rhombi
/// until it leaves the region.
inline PathFamily tiling_to_paths(const Tiling& t, const HexagonParams& p) {
  const Region region = build_region(p);
  if (!is_perfect_matching(t, region)) throw StructuralError("not a tiling of the region " + to_string(p));
  std::map<TriCell, Rhombus> by_up;
  for (const auto& r : t.rhombi) by_up.emplace(r.up, r);
  const PointConfiguration cfg = build_point_configuration(p);
  PathFamily family;
  for (const auto& start : cfg.starts) {
    MonotonePath path;
    VertexPos e = detail::edge_of(start, p.a);
    path.vertices.push_back(start);
    while (true) {
      const auto it = by_up.find(up_cell(e.u, e.v));
      if (it == by_up.end()) break;
      switch (it->second.kind()) {
        case RhombusKind::top:
          e = {e.u - 1, e.v + 1};
          break;
        case RhombusKind::column_wall:
          e = {e.u, e.v + 1};
          break;
        case RhombusKind::row_wall:
          throw StructuralError("path enters a row wall at " + to_string(it->second.up));
      }
      path.vertices.push_back(detail::point_of(e, p.a));
      if (path.vertices.size() > region.size() + 1) throw StructuralError("path does not terminate");
    }
    family.paths.push_back(std::move(path));
  }
  if (!is_valid_family(family, cfg)) throw StructuralError("tiling yields an invalid path family");
  return family;
}

/// All tilings of build_region(p), in path-family enumeration order.
inline std::vector<Tiling> enumerate_tilings(const HexagonParams& p, Budget& budget) {
  const Region region = build_region(p);
  std::vector<Tiling> out;
  enumerate_path_families(p, budget, [&](const PathFamily& f) { out.push_back(paths_to_tiling(f, region)); });
  return out;
}

}  // namespace hexcount
