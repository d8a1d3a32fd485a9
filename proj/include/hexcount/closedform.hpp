#pragma once

#include <cstdint>
#include <string>

#include "hexcount/exact.hpp"
#include "hexcount/params.hpp"

namespace hexcount {

namespace detail {

// Numerator/denominator accumulator for product formulas whose value is an
// integer only after all factors are in.
class ProductRatio {
 public:
  ProductRatio& times(const ExactInt& factor) {
    numerator_ *= factor;
    return *this;
  }
  ProductRatio& over(const ExactInt& factor) {
    denominator_ *= factor;
    return *this;
  }
  // (x)_n, extended to negative n by (x)_{-m} = 1 / ((x-1)(x-2)...(x-m)).
  ProductRatio& rising(std::int64_t x, std::int64_t n) {
    if (n >= 0) return times(pochhammer(x, n));
    const ExactInt inverse = pochhammer(x + n, -n);
    if (inverse == 0) {
      throw DomainError("rising factorial (" + std::to_string(x) + ")_" + std::to_string(n) +
                        " has a vanishing denominator");
    }
    return over(inverse);
  }
  ExactInt value(std::string_view what) const {
    return exact_quotient(numerator_, denominator_, what);
  }

 private:
  ExactInt numerator_ = 1;
  ExactInt denominator_ = 1;
};

inline ExactInt theorem1_bracket(const HexagonParams& p) {
  const ExactInt a = p.a, b = p.b, c = p.c, r = p.r, s = p.s, t = p.t;
  return (a + 1) * (b + 1) * (c + 1) * (a + 2 - r) * (b + 2 - s) * (c + 2 - t) +
         (a + 1) * (b + 1) * (c + 1) * r * s * t - (a + 2 - r) * (b + 2 - s) * (c + 2 - t) * r * s * t +
         (a + 1) * (c + 1) * (b + 2 - s) * (c + 2 - t) * r * s +
         (b + 1) * (a + 1) * (c + 2 - t) * (a + 2 - r) * s * t +
         (c + 1) * (b + 1) * (a + 2 - r) * (b + 2 - s) * t * r;
}

// `prefactor_shift` moves the base of the first rising factorial; nonzero
// values exist only so the verification harness can be shown to catch a
// corrupted formula.
inline ExactInt theorem1_value(const HexagonParams& p, int prefactor_shift) {
  validate(p);
  const auto [a, b, c, r, s, t] = p;
  ProductRatio ratio;
  ratio.rising(r + 1 + prefactor_shift, b)
      .rising(s + 1, c)
      .rising(t + 1, a)
      .rising(c + 3 - t, b)
      .rising(a + 3 - r, c)
      .rising(b + 3 - s, a);
  ratio.times(superfactorial(a))
      .times(superfactorial(b))
      .times(superfactorial(c))
      .times(superfactorial(a + b + c + 2));
  ratio.over(superfactorial(b + c + 2)).over(superfactorial(a + c + 2)).over(superfactorial(a + b + 2));
  ratio.times(theorem1_bracket(p));
  return ratio.value("theorem formula");
}

}  // namespace detail

/// Number of rhombus tilings of the hexagon with sides a+2,c+2,b+2,a+2,c+2,b+2
/// whose border tiles are fixed at positions r,s,t.
inline ExactInt count_theorem1(const HexagonParams& p) { return detail::theorem1_value(p, 0); }

/// Tilings of the hexagon 2n,2n+3,2n,2n+3,2n,2n+3 with the middle triangle
/// of every long side removed.
inline ExactInt count_propp(int n) {
  if (n < 0) throw DomainError("count_propp: n must be >= 0");
  const ExactInt rising = pochhammer(n + 2, 2 * n);
  const ExactInt small = superfactorial(2 * n);
  const ExactInt large = superfactorial(4 * n + 2);
  const ExactInt nn = n;
  ExactInt numerator = boost::multiprecision::pow(rising, 6) * small * small * small *
                       superfactorial(6 * n + 2) * (nn + 1) * (nn + 1) * (nn + 1) * (3 * nn + 1) *
                       (3 * nn + 2) * (3 * nn + 2);
  return exact_quotient(numerator, large * large * large, "count_propp");
}

/// Plane partitions inside an a x b x c box.
inline ExactInt count_macmahon_box(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("count_macmahon_box: negative box side");
  const ExactInt numerator = factorial_product(a - 1) * factorial_product(b - 1) *
                             factorial_product(c - 1) * factorial_product(a + b + c - 1);
  const ExactInt denominator =
      factorial_product(a + b - 1) * factorial_product(b + c - 1) * factorial_product(a + c - 1);
  return exact_quotient(numerator, denominator, "count_macmahon_box");
}

/// det M^{0,a+1}_{0,a+1} for 1 <= r <= a+1.
inline ExactInt det_inner_closed(int a, int b, int c, int r) {
  if (a < 1) throw DomainError("det_inner_closed: a must be >= 1");
  if (b < 0 || c < 0) throw DomainError("det_inner_closed: b and c must be >= 0");
  if (r < 1 || r > a + 1) throw DomainError("det_inner_closed: r must satisfy 1 <= r <= a+1");
  detail::ProductRatio ratio;
  ratio.times(boost::multiprecision::pow(factorial(b + c + 3), static_cast<unsigned>(a)))
      .times(factorial(a + c + 2 - r))
      .times(factorial(b + r));
  for (int i = 1; i <= a + 1; ++i)
    for (int j = i + 1; j <= a + 1; ++j) ratio.times(j - i);
  for (int k = 0; k <= a - 2; ++k) {
    ratio.times(boost::multiprecision::pow(ExactInt(b + c + k + 4), static_cast<unsigned>(a - 1 - k)));
  }
  ratio.over(factorial(a + 1 - r)).over(factorial(r - 1));
  for (int j = 1; j <= a + 1; ++j) ratio.over(factorial(b + j)).over(factorial(a + c + 2 - j));
  return ratio.value("det_inner_closed");
}

/// det M^0_0 for 1 <= r <= a+2, 1 <= s <= b+2. Rising factorials of negative
/// length (at r = 1, r = a+2 and for i > c+1) are read as reciprocals.
inline ExactInt det_m00_closed(int a, int b, int c, int r, int s) {
  if (a < 1) throw DomainError("det_m00_closed: a must be >= 1");
  if (b < 0 || c < 0) throw DomainError("det_m00_closed: b and c must be >= 0");
  if (r < 1 || r > a + 2) throw DomainError("det_m00_closed: r must satisfy 1 <= r <= a+2");
  if (s < 1 || s > b + 2) throw DomainError("det_m00_closed: s must satisfy 1 <= s <= b+2");
  detail::ProductRatio ratio;
  for (int i = 1; i <= a; ++i) ratio.rising(b + i + 3, c + 1 - i).over(factorial(c + i + 2));
  ratio.rising(s + 1, c).over(factorial(a + c + 2));
  for (int i = 1; i <= a; ++i) ratio.times(factorial(i));
  ratio.over(factorial(r - 1)).over(factorial(a + 2 - r));
  ratio.rising(c + 2, a + 1 - r)
      .rising(b + 3, r - 2)
      .rising(c + 1, a + 2)
      .rising(c + 3, a)
      .rising(b + 3 - s, a);
  for (int k = 4; k <= a + 2; ++k) {
    ratio.times(boost::multiprecision::pow(ExactInt(b + c + k), static_cast<unsigned>(a + 3 - k)));
  }
  ratio.times(ExactInt((b + 2) * (a + 1)) - ExactInt(r - 1) * (b + 2 - s));
  return ratio.value("det_m00_closed");
}

}  // namespace hexcount
