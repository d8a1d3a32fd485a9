#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hexcount/exact.hpp"
#include "hexcount/lgv.hpp"
#include "hexcount/matrix.hpp"
#include "hexcount/params.hpp"

namespace hexcount {

/// The determinant lemma
///   det_{1<=i,j<=n} ( prod_{k=i+1}^{n} (X_j + A_k) * prod_{k=2}^{i} (X_j + B_k) )
///     = prod_{i<j} (X_i - X_j) * prod_{2<=i<=j<=n} (B_i - A_j).
/// `x` holds X_1..X_n; `a` and `b` hold A_2..A_n and B_2..B_n.
inline bool check_krattenthaler_lemma(std::span<const ExactInt> x, std::span<const ExactInt> a,
                                      std::span<const ExactInt> b) {
  const std::size_t n = x.size();
  if (n < 1) throw DomainError("krattenthaler lemma: need at least one X");
  if (a.size() != n - 1 || b.size() != n - 1) {
    throw DomainError("krattenthaler lemma: A and B must hold n-1 = " + std::to_string(n - 1) +
                      " values");
  }
  // 1-based accessors into the 2..n ranges.
  auto A = [&](std::size_t k) -> const ExactInt& { return a[k - 2]; };
  auto B = [&](std::size_t k) -> const ExactInt& { return b[k - 2]; };

  CountMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      ExactInt entry = 1;
      for (std::size_t k = i + 1; k <= n; ++k) entry *= x[j - 1] + A(k);
      for (std::size_t k = 2; k <= i; ++k) entry *= x[j - 1] + B(k);
      m(i - 1, j - 1) = std::move(entry);
    }
  }
  ExactInt rhs = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) rhs *= x[i - 1] - x[j - 1];
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) rhs *= B(i) - A(j);
  return det_elimination(m) == rhs;
}

/// Lists (X, A, B) of the substitution X_j = b+j+[j>=r], A_k = -b-c-k-2,
/// B_k = 2-k, j = 1..a, that turns the lemma into det M^{0,a+1}_{0,a+1}.
struct LemmaSubstitution {
  std::vector<ExactInt> x;
  std::vector<ExactInt> a;
  std::vector<ExactInt> b;
};

inline LemmaSubstitution inner_minor_substitution(int a, int b, int c, int r) {
  LemmaSubstitution sub;
  for (int j = 1; j <= a; ++j) sub.x.emplace_back(b + j + (j >= r ? 1 : 0));
  for (int k = 2; k <= a; ++k) {
    sub.a.emplace_back(-b - c - k - 2);
    sub.b.emplace_back(2 - k);
  }
  return sub;
}

/// Polynomial identity that remains after cancelling common factors when
/// the closed form is substituted into the condensation step for det M.
inline bool check_final_identity(const ExactInt& a, const ExactInt& b, const ExactInt& c,
                                 const ExactInt& r, const ExactInt& s, const ExactInt& t) {
  const ExactInt lhs =
      (b + 1) * (c + 1) * ((b + 2) * (a + 1) - (r - 1) * (b + 2 - s)) *
          ((c + 2) * (a + 1) - (a + 1 - r) * t) -
      s * (c + 2 - t) * ((a + 1) * (c + 1) - (a + 2 - r) * t) * ((a + 1) * (b + 1) - r * (b + 2 - s));
  const ExactInt rhs =
      (a + 1) * (b + 1) * (c + 1) * (a + 2 - r) * (b + 2 - s) * (c + 2 - t) +
      (a + 1) * (b + 1) * (c + 1) * r * s * t - (a + 2 - r) * (b + 2 - s) * (c + 2 - t) * r * s * t +
      (a + 1) * (c + 1) * (b + 2 - s) * (c + 2 - t) * r * s +
      (b + 1) * (a + 1) * (c + 2 - t) * (a + 2 - r) * s * t +
      (c + 1) * (b + 1) * (a + 2 - r) * (b + 2 - s) * t * r;
  return lhs == rhs;
}

/// Identity left over in the induction step for det M^0_0.
inline bool check_lemma5_identity(const ExactInt& a, const ExactInt& b, const ExactInt& s,
                                  const ExactInt& r) {
  const ExactInt lhs = ((b + 2) * (a + 1) - (r - 1) * (b + 2 - s)) * (a + b + 2 - s);
  const ExactInt rhs = ((b + 2) * a - (r - 2) * (b + 2 - s)) * (a + b + 2) -
                       ((b + 1) * a - (r - 1) * (b + 2 - s)) * s;
  return lhs == rhs;
}

enum class IdentityStatus { holds, fails, skipped };

inline const char* to_string(IdentityStatus status) {
  switch (status) {
    case IdentityStatus::holds:
      return "holds";
    case IdentityStatus::fails:
      return "fails";
    case IdentityStatus::skipped:
      return "skipped";
  }
  return "?";
}

/// One side of a minor identity: det of M(params) with the given rows and
/// columns (by label) deleted.
struct MinorSpec {
  HexagonParams params;
  std::vector<int> delete_rows;
  std::vector<int> delete_cols;
};

struct IdentityOutcome {
  std::string name;
  IdentityStatus status = IdentityStatus::skipped;
  std::optional<ExactInt> lhs;
  std::optional<ExactInt> rhs;
};

namespace detail {

inline ExactInt minor_determinant(const MinorSpec& spec) {
  const CountMatrix m = matrix_m_unchecked(spec.params);
  return det_elimination(minor(m, spec.delete_rows, spec.delete_cols));
}

// Both sides must be in the validated parameter domain; otherwise skipped.
inline IdentityOutcome compare_validated(std::string name, const MinorSpec& lhs, const MinorSpec& rhs) {
  IdentityOutcome out{std::move(name), IdentityStatus::skipped, std::nullopt, std::nullopt};
  if (!is_valid(lhs.params) || !is_valid(rhs.params)) return out;
  out.lhs = minor_determinant(lhs);
  out.rhs = minor_determinant(rhs);
  out.status = *out.lhs == *out.rhs ? IdentityStatus::holds : IdentityStatus::fails;
  return out;
}

// Boundary identities deliberately step outside 1 <= r <= a+2, so only the
// matrix entries need to be defined.
inline IdentityOutcome compare_raw(std::string name, const MinorSpec& lhs, const MinorSpec& rhs) {
  IdentityOutcome out{std::move(name), IdentityStatus::skipped, std::nullopt, std::nullopt};
  try {
    out.lhs = minor_determinant(lhs);
    out.rhs = minor_determinant(rhs);
  } catch (const DomainError&) {
    out.lhs.reset();
    out.rhs.reset();
    return out;
  }
  out.status = *out.lhs == *out.rhs ? IdentityStatus::holds : IdentityStatus::fails;
  return out;
}

}  // namespace detail

/// The seven relabelling identities that express the minors of M through
/// M^0_0 and M^{0,n}_{0,n} with shifted parameters. Parameters that a
/// deleted row makes irrelevant are set to 1 on the shifted side.
inline std::vector<IdentityOutcome> relabelling_report(const HexagonParams& p) {
  const auto [a, b, c, r, s, t] = p;
  using detail::compare_validated;
  std::vector<IdentityOutcome> out;
  out.push_back(compare_validated("minor-0-last-col", {{a, b, c, r, s, 1}, {0}, {a + 1}},
                                  {{a, b - 1, c + 1, r + 1, s - 1, 1}, {0}, {0}}));
  out.push_back(compare_validated("minor-last-last", {{a, b, c, r, 1, t}, {a + 1}, {a + 1}},
                                  {{a, c, b, a + 2 - r, c + 2 - t, 1}, {0}, {0}}));
  out.push_back(compare_validated("minor-last-0", {{a, b, c, r, 1, t}, {a + 1}, {0}},
                                  {{a, c - 1, b + 1, a + 3 - r, c + 1 - t, 1}, {0}, {0}}));
  out.push_back(compare_validated("minor-01last-01last", {{a, b, c, r, 1, 1}, {0, 1, a + 1}, {0, 1, a + 1}},
                                  {{a - 1, b, c, r - 1, 1, 1}, {0, a}, {0, a}}));
  out.push_back(compare_validated("minor-01-01", {{a, b, c, r, s, 1}, {0, 1}, {0, 1}},
                                  {{a - 1, b, c, r - 1, s, 1}, {0}, {0}}));
  out.push_back(compare_validated("minor-01-0last", {{a, b, c, r, s, 1}, {0, 1}, {0, a + 1}},
                                  {{a - 1, b - 1, c + 1, r, s - 1, 1}, {0}, {0}}));
  out.push_back(compare_validated("minor-0last-01", {{a, b, c, r, 1, 1}, {0, a + 1}, {0, 1}},
                                  {{a, b + 1, c - 1, r - 1, 1, 1}, {0, a + 1}, {0, a + 1}}));
  return out;
}

/// True iff no relabelling identity fails (skipped ones do not count).
inline bool check_relabelling_identities(const HexagonParams& p) {
  for (const auto& outcome : relabelling_report(p)) {
    if (outcome.status == IdentityStatus::fails) return false;
  }
  return true;
}

/// Boundary identities: r only enters through [j >= r], so r = 0 behaves
/// like r = 1 and r >= a+2 like a+1 (inner minor) or a+2 (M^0_0).
/// `r_beyond` >= a+2 selects the instance of the inner-minor identity.
inline std::vector<IdentityOutcome> boundary_report(int a, int b, int c, int s, int t, int r_beyond) {
  using detail::compare_raw;
  const std::vector<int> outer{0, a + 1};
  std::vector<IdentityOutcome> out;
  out.push_back(compare_raw("inner-r0-as-r1", {{a, b, c, 0, s, t}, outer, outer}, {{a, b, c, 1, s, t}, outer, outer}));
  IdentityOutcome beyond{"inner-r-beyond", IdentityStatus::skipped, std::nullopt, std::nullopt};
  if (r_beyond >= a + 2) {
    beyond = compare_raw("inner-r-beyond", {{a, b, c, r_beyond, s, t}, outer, outer},
                        {{a, b, c, a + 1, s, t}, outer, outer});
  }
  out.push_back(std::move(beyond));
  out.push_back(compare_raw("corner-r0-as-r1", {{a, b, c, 0, s, t}, {0}, {0}}, {{a, b, c, 1, s, t}, {0}, {0}}));
  out.push_back(compare_raw("corner-r-beyond", {{a, b, c, a + 3, s, t}, {0}, {0}}, {{a, b, c, a + 2, s, t}, {0}, {0}}));
  return out;
}

/// The condensation step det M * det M^{0,a+1}_{0,a+1} = ... on M itself.
inline bool check_condensation_on_M(const HexagonParams& p) {
  return verify_desnanot_jacobi(detail::matrix_m_unchecked(p));
}

}  // namespace hexcount
