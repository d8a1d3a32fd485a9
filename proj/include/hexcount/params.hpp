#pragma once

#include <compare>
#include <string>

#include "hexcount/exact.hpp"

namespace hexcount {

/// Shape (a,b,c) of the hexagon with sides a+2,c+2,b+2,a+2,c+2,b+2 and the
/// positions r,s,t of the three fixed border tiles.
///
/// Valid instances satisfy 1 <= r <= a+2, 1 <= s <= b+2, 1 <= t <= c+2.
struct HexagonParams {
  int a = 0;
  int b = 0;
  int c = 0;
  int r = 1;
  int s = 1;
  int t = 1;

  friend auto operator<=>(const HexagonParams&, const HexagonParams&) = default;
};

inline std::string to_string(const HexagonParams& p) {
  return "(a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b) + ",c=" + std::to_string(p.c) +
         ",r=" + std::to_string(p.r) + ",s=" + std::to_string(p.s) + ",t=" + std::to_string(p.t) +
         ")";
}

/// Throws DomainError naming the first offending parameter.
inline void validate(const HexagonParams& p) {
  auto fail = [&](const std::string& what) {
    throw DomainError("invalid parameter " + what + " in " + to_string(p));
  };
  if (p.a < 0) fail("a: must be >= 0");
  if (p.b < 0) fail("b: must be >= 0");
  if (p.c < 0) fail("c: must be >= 0");
  if (p.r < 1 || p.r > p.a + 2) fail("r: must satisfy 1 <= r <= a+2");
  if (p.s < 1 || p.s > p.b + 2) fail("s: must satisfy 1 <= s <= b+2");
  if (p.t < 1 || p.t > p.c + 2) fail("t: must satisfy 1 <= t <= c+2");
}

inline bool is_valid(const HexagonParams& p) noexcept {
  return p.a >= 0 && p.b >= 0 && p.c >= 0 && p.r >= 1 && p.r <= p.a + 2 && p.s >= 1 &&
         p.s <= p.b + 2 && p.t >= 1 && p.t <= p.c + 2;
}

/// (a,b,c,r,s,t) -> (b,c,a,s,t,r)
inline HexagonParams rotate_cyclic(const HexagonParams& p) {
  return {p.b, p.c, p.a, p.s, p.t, p.r};
}

/// Visits every valid tuple with a <= max_a, b <= max_b, c <= max_c in
/// lexicographic order of (a,b,c,r,s,t).
template <class Visitor>
void for_each_valid(int max_a, int max_b, int max_c, Visitor&& visit) {
  for (int a = 0; a <= max_a; ++a)
    for (int b = 0; b <= max_b; ++b)
      for (int c = 0; c <= max_c; ++c)
        for (int r = 1; r <= a + 2; ++r)
          for (int s = 1; s <= b + 2; ++s)
            for (int t = 1; t <= c + 2; ++t) visit(HexagonParams{a, b, c, r, s, t});
}

}  // namespace hexcount
