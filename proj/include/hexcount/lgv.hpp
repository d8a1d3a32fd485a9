#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexcount/exact.hpp"
#include "hexcount/matrix.hpp"
#include "hexcount/params.hpp"

namespace hexcount {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

/// Start points P_0..P_{a+1} and end points Q_0..Q_{a+1} of the path model.
struct PointConfiguration {
  std::vector<LatticePoint> starts;
  std::vector<LatticePoint> ends;
  HexagonParams params;
};

namespace detail {

inline int shift_at(int j, int r) { return j >= r ? 1 : 0; }

inline PointConfiguration point_configuration_unchecked(const HexagonParams& p) {
  PointConfiguration cfg;
  cfg.params = p;
  const int n = p.a + 2;
  cfg.starts.reserve(n);
  cfg.ends.reserve(n);
  cfg.starts.push_back({0, p.c + 2 - p.t});
  for (int i = 1; i <= p.a; ++i) cfg.starts.push_back({i - 1, p.c + 2 + i});
  cfg.starts.push_back({p.a + p.b + 2 - p.s, p.a + p.c + 2});
  for (int j = 0; j <= p.a + 1; ++j) {
    const int shift = shift_at(j, p.r);
    cfg.ends.push_back({p.b + j + shift, j + shift});
  }
  return cfg;
}

}  // namespace detail

inline PointConfiguration build_point_configuration(const HexagonParams& p) {
  validate(p);
  return detail::point_configuration_unchecked(p);
}

/// Number of lattice paths from p to q with unit steps (+1,0) and (0,-1).
inline ExactInt count_paths(const LatticePoint& p, const LatticePoint& q) {
  const std::int64_t right = q.x - p.x;
  const std::int64_t down = p.y - q.y;
  if (right < 0 || down < 0) return 0;
  return binomial(right + down, down);
}

namespace detail {

// Entry formula of M for any integer r,s,t. Throws DomainError when a
// binomial upper index goes negative.
inline CountMatrix matrix_m_unchecked(const HexagonParams& p) {
  const int n = p.a + 2;
  if (p.a < 0 || p.b < 0 || p.c < 0) throw DomainError("negative hexagon side in " + to_string(p));
  CountMatrix m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int shift = shift_at(j, p.r);
      ExactInt entry;
      if (i == 0) {
        entry = binomial(p.b + p.c - p.t + 2, p.c + 2 - p.t - j - shift);
      } else if (i <= p.a) {
        entry = binomial(p.b + p.c + 3, p.b + j + shift - i + 1);
      } else {
        entry = binomial(p.c + p.s, j + shift - p.a - 2 + p.s);
      }
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::move(entry);
    }
  }
  return m;
}

}  // namespace detail

/// The (a+2)x(a+2) binomial matrix M(a,b,c,r,s,t); rows and columns are
/// labelled 0..a+1.
inline CountMatrix build_matrix_M(const HexagonParams& p) {
  validate(p);
  return detail::matrix_m_unchecked(p);
}

/// The matrix of pairwise path counts count_paths(P_i, Q_j).
inline CountMatrix path_count_matrix(const PointConfiguration& cfg) {
  const std::size_t n = cfg.starts.size();
  CountMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = count_paths(cfg.starts[i], cfg.ends[j]);
  return m;
}

}  // namespace hexcount
