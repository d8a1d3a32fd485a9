#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hexcount/closedform.hpp"
#include "hexcount/identities.hpp"
#include "hexcount/lgv.hpp"
#include "hexcount/matrix.hpp"
#include "hexcount/params.hpp"

namespace hexcount {

struct IdentityTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  /// First few failing cases, for the report.
  std::vector<std::string> failures;

  void record(bool ok, const std::string& where) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 5) failures.push_back(where);
  }
};

struct SuiteOptions {
  /// Grid bound for parameter sweeps (a,b,c <= bound, polynomial grids {0..bound}).
  int bound = 3;
  std::uint64_t seed = 20240601;
  int matrix_trials = 100;
  int lemma_trials = 50;
  int polynomial_trials = 100;
};

namespace detail {

inline CountMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  CountMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

inline std::string tuple_string(std::initializer_list<ExactInt> values) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ",";
    out += to_decimal(v);
    first = false;
  }
  return out + ")";
}

}  // namespace detail

/// Every identity the product formula's proof relies on, checked
/// numerically. Deterministic for a fixed seed.
inline std::vector<IdentityTally> run_identity_suite(const SuiteOptions& options = {}) {
  std::mt19937_64 rng(options.seed);
  const int bound = options.bound;
  std::vector<IdentityTally> out;

  {
    IdentityTally tally{"desnanot-jacobi", 0, 0, 0, {}};
    for (std::size_t n : {4u, 5u}) {
      for (int trial = 0; trial < options.matrix_trials; ++trial) {
        const auto m = detail::random_matrix(rng, n, -9, 9);
        tally.record(verify_desnanot_jacobi(m), "random " + std::to_string(n) + "x" + std::to_string(n));
      }
    }
    for_each_valid(bound, bound, bound, [&](const HexagonParams& p) {
      tally.record(check_condensation_on_M(p), "M" + to_string(p));
    });
    out.push_back(std::move(tally));
  }

  {
    IdentityTally tally{"determinant-lemma", 0, 0, 0, {}};
    std::uniform_int_distribution<int> size(1, 5), value(-20, 20);
    for (int trial = 0; trial < options.lemma_trials; ++trial) {
      const int n = size(rng);
      std::vector<ExactInt> x, a, b;
      for (int k = 0; k < n; ++k) x.emplace_back(value(rng));
      for (int k = 1; k < n; ++k) {
        a.emplace_back(value(rng));
        b.emplace_back(value(rng));
      }
      tally.record(check_krattenthaler_lemma(x, a, b), "random n=" + std::to_string(n));
    }
    for (int a = 1; a <= bound + 1; ++a)
      for (int b = 0; b <= bound; ++b)
        for (int c = 0; c <= bound; ++c)
          for (int r = 1; r <= a + 1; ++r) {
            const auto sub = inner_minor_substitution(a, b, c, r);
            tally.record(check_krattenthaler_lemma(sub.x, sub.a, sub.b),
                         "substitution " + detail::tuple_string({a, b, c, r}));
          }
    out.push_back(std::move(tally));
  }

  {
    IdentityTally tally{"final-identity", 0, 0, 0, {}};
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b)
        for (int c = 0; c <= bound; ++c)
          for (int r = 0; r <= bound; ++r)
            for (int s = 0; s <= bound; ++s)
              for (int t = 0; t <= bound; ++t)
                tally.record(check_final_identity(a, b, c, r, s, t), detail::tuple_string({a, b, c, r, s, t}));
    std::uniform_int_distribution<std::int64_t> wide(INT64_MIN, INT64_MAX);
    for (int trial = 0; trial < options.polynomial_trials; ++trial) {
      const ExactInt a = wide(rng), b = wide(rng), c = wide(rng), r = wide(rng), s = wide(rng), t = wide(rng);
      tally.record(check_final_identity(a, b, c, r, s, t), detail::tuple_string({a, b, c, r, s, t}));
    }
    out.push_back(std::move(tally));
  }

  {
    IdentityTally tally{"corner-minor-identity", 0, 0, 0, {}};
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b)
        for (int s = 0; s <= bound; ++s)
          for (int r = 0; r <= bound; ++r)
            tally.record(check_lemma5_identity(a, b, s, r), detail::tuple_string({a, b, s, r}));
    std::uniform_int_distribution<std::int64_t> wide(INT64_MIN, INT64_MAX);
    for (int trial = 0; trial < options.polynomial_trials; ++trial) {
      const ExactInt a = wide(rng), b = wide(rng), s = wide(rng), r = wide(rng);
      tally.record(check_lemma5_identity(a, b, s, r), detail::tuple_string({a, b, s, r}));
    }
    out.push_back(std::move(tally));
  }

  // Relabelling identities: one tally per equation, over all tuples with
  // a,b,c <= bound and valid r,s,t.
  {
    std::vector<IdentityTally> tallies;
    for_each_valid(bound, bound, bound, [&](const HexagonParams& p) {
      const auto report = relabelling_report(p);
      if (tallies.empty())
        for (const auto& o : report) tallies.push_back({o.name, 0, 0, 0, {}});
      for (std::size_t k = 0; k < report.size(); ++k) {
        if (report[k].status == IdentityStatus::skipped) {
          ++tallies[k].skipped;
        } else {
          tallies[k].record(report[k].status == IdentityStatus::holds, to_string(p));
        }
      }
    });
    for (auto& t : tallies) out.push_back(std::move(t));
  }

  // Boundary identities: r stepped to 0 and past a+2.
  {
    std::vector<IdentityTally> tallies;
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b)
        for (int c = 0; c <= bound; ++c)
          for (int s = 1; s <= b + 2; ++s)
            for (int t = 1; t <= c + 2; ++t)
              for (int beyond = a + 2; beyond <= a + 3; ++beyond) {
                const auto report = boundary_report(a, b, c, s, t, beyond);
                if (tallies.empty())
                  for (const auto& o : report) tallies.push_back({o.name, 0, 0, 0, {}});
                for (std::size_t k = 0; k < report.size(); ++k) {
                  if (report[k].status == IdentityStatus::skipped) {
                    ++tallies[k].skipped;
                  } else {
                    tallies[k].record(report[k].status == IdentityStatus::holds,
                                      detail::tuple_string({a, b, c, beyond, s, t}));
                  }
                }
              }
    for (auto& t : tallies) out.push_back(std::move(t));
  }

  // Closed forms of the two minors against elimination.
  {
    IdentityTally inner{"inner-minor-closed-form", 0, 0, 0, {}};
    IdentityTally m00{"m00-minor-closed-form", 0, 0, 0, {}};
    for (int a = 1; a <= bound + 1; ++a)
      for (int b = 0; b <= bound + 1; ++b)
        for (int c = 0; c <= bound + 1; ++c)
          for (int r = 1; r <= a + 2; ++r)
            for (int s = 1; s <= b + 2; ++s) {
              const CountMatrix m = build_matrix_M({a, b, c, r, s, 1});
              const std::string where = detail::tuple_string({a, b, c, r, s});
              if (s == 1 && r <= a + 1) {
                inner.record(det_inner_closed(a, b, c, r) == det_elimination(minor(m, {0, a + 1}, {0, a + 1})),
                             where);
              }
              m00.record(det_m00_closed(a, b, c, r, s) == det_elimination(minor(m, {0}, {0})), where);
            }
    out.push_back(std::move(inner));
    out.push_back(std::move(m00));
  }
  return out;
}

}  // namespace hexcount
