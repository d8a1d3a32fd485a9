#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hexcount/exact.hpp"
#include "hexcount/lgv.hpp"
#include "hexcount/params.hpp"

namespace hexcount {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Node-expansion allowance shared by the exhaustive enumerators.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) {
      throw ResourceError("work budget of " + std::to_string(limit_) + " node expansions exhausted");
    }
  }

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Lattice path with unit steps (+1,0) and (0,-1).
struct MonotonePath {
  std::vector<LatticePoint> vertices;

  friend bool operator==(const MonotonePath&, const MonotonePath&) = default;
  friend auto operator<=>(const MonotonePath&, const MonotonePath&) = default;
};

struct PathFamily {
  std::vector<MonotonePath> paths;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
  friend auto operator<=>(const PathFamily&, const PathFamily&) = default;
};

inline bool is_monotone(const MonotonePath& path) {
  if (path.vertices.empty()) return false;
  for (std::size_t k = 1; k < path.vertices.size(); ++k) {
    const auto dx = path.vertices[k].x - path.vertices[k - 1].x;
    const auto dy = path.vertices[k].y - path.vertices[k - 1].y;
    if (!((dx == 1 && dy == 0) || (dx == 0 && dy == -1))) return false;
  }
  return true;
}

/// Checks monotone steps, endpoints P_i -> Q_i, and vertex-disjointness.
inline bool is_valid_family(const PathFamily& family, const PointConfiguration& cfg) {
  if (family.paths.size() != cfg.starts.size()) return false;
  std::vector<LatticePoint> seen;
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    const auto& path = family.paths[i];
    if (!is_monotone(path)) return false;
    if (path.vertices.front() != cfg.starts[i] || path.vertices.back() != cfg.ends[i]) return false;
    seen.insert(seen.end(), path.vertices.begin(), path.vertices.end());
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

using FamilySink = std::function<void(const PathFamily&)>;

namespace detail {

class FamilySearch {
 public:
  FamilySearch(const PointConfiguration& cfg, Budget& budget, const FamilySink& sink)
      : cfg_(cfg), budget_(budget), sink_(sink) {
    min_x_ = max_x_ = cfg.starts.front().x;
    min_y_ = max_y_ = cfg.starts.front().y;
    for (const auto* points : {&cfg.starts, &cfg.ends}) {
      for (const auto& p : *points) {
        min_x_ = std::min(min_x_, p.x);
        max_x_ = std::max(max_x_, p.x);
        min_y_ = std::min(min_y_, p.y);
        max_y_ = std::max(max_y_, p.y);
      }
    }
    width_ = max_x_ - min_x_ + 1;
    occupied_.assign(static_cast<std::size_t>(width_ * (max_y_ - min_y_ + 1)), false);
    family_.paths.resize(cfg.starts.size());
  }

  ExactInt run() {
    count_ = 0;
    start_path(0);
    return count_;
  }

 private:
  std::size_t cell(const LatticePoint& p) const {
    return static_cast<std::size_t>((p.y - min_y_) * width_ + (p.x - min_x_));
  }

  void start_path(std::size_t index) {
    if (index == cfg_.starts.size()) {
      ++count_;
      if (sink_) sink_(family_);
      return;
    }
    const LatticePoint start = cfg_.starts[index];
    const LatticePoint end = cfg_.ends[index];
    if (end.x < start.x || end.y > start.y || occupied_[cell(start)]) return;
    auto& path = family_.paths[index].vertices;
    path.assign(1, start);
    occupied_[cell(start)] = true;
    extend(index, start, end);
    occupied_[cell(start)] = false;
  }

  void extend(std::size_t index, LatticePoint at, LatticePoint end) {
    budget_.charge();
    if (at == end) {
      start_path(index + 1);
      return;
    }
    auto& path = family_.paths[index].vertices;
    for (const LatticePoint next : {LatticePoint{at.x + 1, at.y}, LatticePoint{at.x, at.y - 1}}) {
      if (next.x > end.x || next.y < end.y) continue;
      const std::size_t id = cell(next);
      if (occupied_[id]) continue;
      occupied_[id] = true;
      path.push_back(next);
      extend(index, next, end);
      path.pop_back();
      occupied_[id] = false;
    }
  }

  const PointConfiguration& cfg_;
  Budget& budget_;
  const FamilySink& sink_;
  std::int64_t min_x_, max_x_, min_y_, max_y_, width_;
  std::vector<bool> occupied_;
  PathFamily family_;
  ExactInt count_ = 0;
};

}  // namespace detail

/// Exhaustive count of nonintersecting families P_i -> Q_i. Paths are built in
/// index order; a partial path may not touch a vertex already used. Each
/// emitted family is passed to `sink` in enumeration order.
inline ExactInt enumerate_path_families(const HexagonParams& p, Budget& budget,
                                        const FamilySink& sink = {}) {
  const PointConfiguration cfg = build_point_configuration(p);
  return detail::FamilySearch(cfg, budget, sink).run();
}

inline ExactInt enumerate_path_families(const HexagonParams& p) {
  Budget budget;
  return enumerate_path_families(p, budget);
}

/// Rectangular array with nonincreasing rows and columns, stored row-major.
struct PlanePartition {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;

  PlanePartition() = default;
  PlanePartition(int rows_, int cols_) : rows(rows_), cols(cols_), entries(static_cast<std::size_t>(rows_ * cols_), 0) {}
  PlanePartition(std::initializer_list<std::initializer_list<int>> values) {
    rows = static_cast<int>(values.size());
    cols = rows ? static_cast<int>(values.begin()->size()) : 0;
    for (const auto& row : values) {
      if (static_cast<int>(row.size()) != cols) throw DomainError("ragged plane partition literal");
      entries.insert(entries.end(), row.begin(), row.end());
    }
  }

  int& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
  int at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
  friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;
};

inline bool is_plane_partition(const PlanePartition& pp, int max_entry) {
  for (int i = 0; i < pp.rows; ++i) {
    for (int j = 0; j < pp.cols; ++j) {
      const int v = pp.at(i, j);
      if (v < 0 || v > max_entry) return false;
      if (j > 0 && v > pp.at(i, j - 1)) return false;
      if (i > 0 && v > pp.at(i - 1, j)) return false;
    }
  }
  return true;
}

/// Number of entries equal to c+2 in the first row, zeros in the last
/// column, and the bottom-left entry: the data the fixed tiles pin down.
struct BorderProfile {
  int first_row_full = 0;
  int last_column_zeros = 0;
  int bottom_left = 0;
};

inline BorderProfile border_profile(const PlanePartition& pp, int height) {
  BorderProfile profile;
  for (int j = 0; j < pp.cols; ++j) profile.first_row_full += pp.at(0, j) == height ? 1 : 0;
  for (int i = 0; i < pp.rows; ++i) profile.last_column_zeros += pp.at(i, pp.cols - 1) == 0 ? 1 : 0;
  profile.bottom_left = pp.at(pp.rows - 1, 0);
  return profile;
}

/// Whether `pp` (an (a+2)x(b+2) array with entries <= c+2) has exactly b+2-s
/// entries c+2 in its first row, exactly r zeros in its last column, and
/// bottom-left entry c+2-t.
inline bool satisfies_border_constraints(const PlanePartition& pp, const HexagonParams& p) {
  if (pp.rows != p.a + 2 || pp.cols != p.b + 2) return false;
  const auto profile = border_profile(pp, p.c + 2);
  return profile.first_row_full == p.b + 2 - p.s && profile.last_column_zeros == p.r &&
         profile.bottom_left == p.c + 2 - p.t;
}

using PartitionSink = std::function<void(const PlanePartition&)>;

namespace detail {

// Fills cells row-major; every cell is bounded above by its upper and left
// neighbours and clamped to [lower, upper] from `bounds`.
class PartitionSearch {
 public:
  PartitionSearch(int rows, int cols, int height, Budget& budget, const PartitionSink& sink)
      : pp_(rows, cols),
        height_(height),
        lower_(static_cast<std::size_t>(rows * cols), 0),
        upper_(static_cast<std::size_t>(rows * cols), height),
        budget_(budget),
        sink_(sink) {}

  void clamp(int i, int j, int lo, int hi) {
    auto k = static_cast<std::size_t>(i * pp_.cols + j);
    lower_[k] = std::max(lower_[k], lo);
    upper_[k] = std::min(upper_[k], hi);
  }

  ExactInt run() {
    count_ = 0;
    if (pp_.rows == 0 || pp_.cols == 0) {
      budget_.charge();
      count_ = 1;
      if (sink_) sink_(pp_);
      return count_;
    }
    fill(0);
    return count_;
  }

 private:
  void fill(int k) {
    budget_.charge();
    if (k == pp_.rows * pp_.cols) {
      ++count_;
      if (sink_) sink_(pp_);
      return;
    }
    const int i = k / pp_.cols;
    const int j = k % pp_.cols;
    int hi = upper_[static_cast<std::size_t>(k)];
    if (i > 0) hi = std::min(hi, pp_.at(i - 1, j));
    if (j > 0) hi = std::min(hi, pp_.at(i, j - 1));
    for (int v = lower_[static_cast<std::size_t>(k)]; v <= hi; ++v) {
      pp_.at(i, j) = v;
      fill(k + 1);
    }
    pp_.at(i, j) = 0;
  }

  PlanePartition pp_;
  int height_;
  std::vector<int> lower_;
  std::vector<int> upper_;
  Budget& budget_;
  const PartitionSink& sink_;
  ExactInt count_ = 0;
};

}  // namespace detail

/// Plane partitions with `rows` rows, `cols` columns and entries <= height.
inline ExactInt enumerate_plane_partitions_box(int rows, int cols, int height, Budget& budget,
                                               const PartitionSink& sink = {}) {
  if (rows < 0 || cols < 0 || height < 0) throw DomainError("box sides must be >= 0");
  return detail::PartitionSearch(rows, cols, height, budget, sink).run();
}

inline ExactInt enumerate_plane_partitions_box(int rows, int cols, int height) {
  Budget budget;
  return enumerate_plane_partitions_box(rows, cols, height, budget);
}

/// Plane partitions in the (a+2)x(b+2)x(c+2) box satisfying
/// satisfies_border_constraints. The counts are read as exact counts; since
/// rows and columns are monotone they become per-cell bounds.
inline ExactInt enumerate_constrained_pp(const HexagonParams& p, Budget& budget,
                                         const PartitionSink& sink = {}) {
  validate(p);
  const int rows = p.a + 2, cols = p.b + 2, height = p.c + 2;
  detail::PartitionSearch search(rows, cols, height, budget, sink);
  const int full = cols - p.s;  // first-row entries equal to height
  for (int j = 0; j < full; ++j) search.clamp(0, j, height, height);
  if (full < cols) search.clamp(0, full, 0, height - 1);
  const int zeros = p.r;  // trailing zeros of the last column
  for (int i = rows - zeros; i < rows; ++i) search.clamp(i, cols - 1, 0, 0);
  if (rows - zeros - 1 >= 0) search.clamp(rows - zeros - 1, cols - 1, 1, height);
  search.clamp(rows - 1, 0, height - p.t, height - p.t);
  return search.run();
}

inline ExactInt enumerate_constrained_pp(const HexagonParams& p) {
  Budget budget;
  return enumerate_constrained_pp(p, budget);
}

// Line format for families: paths separated by ';', vertices by ',', and the
// two coordinates of a vertex by a single space, e.g. "0 1,0 0,1 0;1 2,2 2".

inline std::string format_family(const PathFamily& family) {
  std::string out;
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    if (i) out += ';';
    const auto& vertices = family.paths[i].vertices;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(vertices[k].x);
      out += ' ';
      out += std::to_string(vertices[k].y);
    }
  }
  return out;
}

inline PathFamily parse_family(std::string_view line) {
  PathFamily family;
  auto split = [](std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
      const auto end = text.find(sep, begin);
      parts.push_back(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
      if (end == std::string_view::npos) break;
      begin = end + 1;
    }
    return parts;
  };
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  if (line.empty()) throw DomainError("empty family line");
  for (auto path_text : split(line, ';')) {
    MonotonePath path;
    for (auto vertex_text : split(path_text, ',')) {
      std::istringstream in{std::string(vertex_text)};
      LatticePoint point;
      std::string rest;
      if (!(in >> point.x >> point.y) || (in >> rest)) {
        throw DomainError("malformed vertex '" + std::string(vertex_text) + "'");
      }
      path.vertices.push_back(point);
    }
    family.paths.push_back(std::move(path));
  }
  return family;
}

}  // namespace hexcount
