#include <gtest/gtest.h>

#include <random>

#include "hexcount/identities.hpp"
#include "hexcount/suite.hpp"

using namespace hexcount;

namespace {

std::vector<ExactInt> ints(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST(DeterminantLemma, Examples) {
  EXPECT_TRUE(check_krattenthaler_lemma(ints({5}), {}, {}));
  EXPECT_TRUE(check_krattenthaler_lemma(ints({1, 2, 3}), ints({0, 5}), ints({7, -2})));
  EXPECT_THROW(check_krattenthaler_lemma({}, {}, {}), DomainError);
  EXPECT_THROW(check_krattenthaler_lemma(ints({1, 2}), ints({1, 2}), ints({1})), DomainError);
}

TEST(DeterminantLemma, RandomParameterizations) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 5), value(-30, 30);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = size(rng);
    std::vector<ExactInt> x, a, b;
    for (int k = 0; k < n; ++k) x.emplace_back(value(rng));
    for (int k = 1; k < n; ++k) {
      a.emplace_back(value(rng));
      b.emplace_back(value(rng));
    }
    EXPECT_TRUE(check_krattenthaler_lemma(x, a, b));
  }
}

TEST(DeterminantLemma, InnerMinorSubstitution) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int r = 1; r <= a + 1; ++r) {
          const auto sub = inner_minor_substitution(a, b, c, r);
          EXPECT_TRUE(check_krattenthaler_lemma(sub.x, sub.a, sub.b));
        }
}

TEST(PolynomialIdentities, Grids) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int r = 0; r <= 3; ++r) {
          EXPECT_TRUE(check_lemma5_identity(a, b, c, r));
          for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 3; ++t) EXPECT_TRUE(check_final_identity(a, b, c, r, s, t));
        }
}

TEST(PolynomialIdentities, WideRandomValues) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> wide(INT64_MIN, INT64_MAX);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_TRUE(check_final_identity(wide(rng), wide(rng), wide(rng), wide(rng), wide(rng), wide(rng)));
    EXPECT_TRUE(check_lemma5_identity(wide(rng), wide(rng), wide(rng), wide(rng)));
  }
}

TEST(PolynomialIdentities, OriginValues) {
  EXPECT_TRUE(check_final_identity(0, 0, 0, 0, 0, 0));
  EXPECT_TRUE(check_lemma5_identity(0, 0, 0, 0));
}

TEST(Relabelling, AllHoldAtTwos) {
  const auto report = relabelling_report({2, 2, 2, 2, 2, 2});
  ASSERT_EQ(report.size(), 7u);
  for (const auto& o : report) EXPECT_EQ(o.status, IdentityStatus::holds) << o.name;
  EXPECT_TRUE(check_relabelling_identities({2, 2, 2, 2, 2, 2}));
}

TEST(Relabelling, OnesSkipUnconstructible) {
  const auto report = relabelling_report({1, 1, 1, 1, 1, 1});
  int skipped = 0;
  for (const auto& o : report) {
    EXPECT_NE(o.status, IdentityStatus::fails) << o.name;
    skipped += o.status == IdentityStatus::skipped;
  }
  EXPECT_GT(skipped, 0);
  EXPECT_TRUE(check_relabelling_identities({1, 1, 1, 1, 1, 1}));
}

TEST(Relabelling, NoFailuresUpToThree) {
  for_each_valid(3, 3, 3, [](const HexagonParams& p) { EXPECT_TRUE(check_relabelling_identities(p)) << to_string(p); });
}

TEST(Boundary, AllHoldUpToThree) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int s = 1; s <= b + 2; ++s)
          for (int t = 1; t <= c + 2; ++t)
            for (const auto& o : boundary_report(a, b, c, s, t, a + 3))
              EXPECT_EQ(o.status, IdentityStatus::holds) << o.name << " " << a << b << c << s << t;
}

TEST(Condensation, OnMatrixM) {
  for_each_valid(2, 2, 2, [](const HexagonParams& p) { EXPECT_TRUE(check_condensation_on_M(p)); });
}

TEST(Suite, BoundOneHasSkipsButNoFailures) {
  SuiteOptions options;
  options.bound = 1;
  std::uint64_t skipped = 0;
  for (const auto& t : run_identity_suite(options)) {
    EXPECT_EQ(t.failed, 0u) << t.name;
    skipped += t.skipped;
  }
  EXPECT_GT(skipped, 0u);
}

TEST(Suite, DeterministicForSeed) {
  SuiteOptions options;
  options.bound = 1;
  const auto first = run_identity_suite(options);
  const auto second = run_identity_suite(options);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    EXPECT_EQ(first[k].name, second[k].name);
    EXPECT_EQ(first[k].passed, second[k].passed);
  }
}
