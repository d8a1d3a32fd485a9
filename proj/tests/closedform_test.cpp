#include <gtest/gtest.h>

#include "hexcount/closedform.hpp"
#include "hexcount/lgv.hpp"
#include "hexcount/matrix.hpp"
#include "hexcount/oracle.hpp"

using namespace hexcount;

TEST(ProductFormula, SmallestInstanceIsOne) {
  EXPECT_EQ(count_theorem1({0, 0, 0, 1, 1, 1}), 1);
  EXPECT_EQ(detail::theorem1_bracket({0, 0, 0, 1, 1, 1}), 4);
}

TEST(ProductFormula, MatchesDeterminant) {
  for_each_valid(3, 3, 3, [](const HexagonParams& p) {
    EXPECT_EQ(count_theorem1(p), det_elimination(build_matrix_M(p))) << to_string(p);
  });
  EXPECT_EQ(count_theorem1({2, 1, 1, 2, 2, 1}), det_elimination(build_matrix_M({2, 1, 1, 2, 2, 1})));
}

TEST(ProductFormula, CyclicSymmetry) {
  for_each_valid(4, 4, 4, [](const HexagonParams& p) {
    EXPECT_EQ(count_theorem1(p), count_theorem1(rotate_cyclic(p))) << to_string(p);
  });
}

TEST(ProductFormula, PositiveOnDomain) {
  for_each_valid(4, 4, 4, [](const HexagonParams& p) { EXPECT_GE(count_theorem1(p), 1) << to_string(p); });
}

TEST(ProductFormula, RejectsInvalidParameters) {
  EXPECT_THROW(count_theorem1({0, 0, 0, 0, 1, 1}), DomainError);
  EXPECT_THROW(count_theorem1({0, 0, 0, 1, 3, 1}), DomainError);
  EXPECT_THROW(count_theorem1({-1, 0, 0, 1, 1, 1}), DomainError);
}

TEST(ProductFormula, LargeInstanceStaysExact) {
  const HexagonParams p{12, 10, 11, 5, 3, 9};
  EXPECT_EQ(count_theorem1(p), det_elimination(build_matrix_M(p)));
}

TEST(Propp, Specialization) {
  EXPECT_EQ(count_propp(0), 1);
  EXPECT_EQ(count_propp(0), count_theorem1({0, 0, 0, 1, 1, 1}));
  for (int n = 0; n <= 3; ++n) {
    const HexagonParams p{2 * n, 2 * n, 2 * n, n + 1, n + 1, n + 1};
    EXPECT_EQ(count_propp(n), count_theorem1(p)) << n;
    EXPECT_EQ(count_propp(n), det_elimination(build_matrix_M(p))) << n;
  }
  EXPECT_THROW(count_propp(-1), DomainError);
}

TEST(MacMahon, BoxFormula) {
  EXPECT_EQ(count_macmahon_box(0, 3, 4), 1);
  EXPECT_EQ(count_macmahon_box(1, 1, 1), 2);
  EXPECT_EQ(count_macmahon_box(2, 2, 2), 20);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) EXPECT_EQ(count_macmahon_box(a, b, c), enumerate_plane_partitions_box(a, b, c));
  EXPECT_THROW(count_macmahon_box(-1, 0, 0), DomainError);
}

TEST(InnerMinor, ClosedFormMatchesElimination) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int r = 1; r <= a + 1; ++r) {
          const auto m = build_matrix_M({a, b, c, r, 1, 1});
          EXPECT_EQ(det_inner_closed(a, b, c, r), det_elimination(minor(m, {0, a + 1}, {0, a + 1})))
              << a << b << c << r;
        }
}

TEST(InnerMinor, SingleEntryCase) {
  for (int b = 0; b <= 4; ++b)
    for (int c = 0; c <= 4; ++c) EXPECT_EQ(det_inner_closed(1, b, c, 1), binomial(b + c + 3, b + 2));
}

TEST(InnerMinor, RangeChecks) {
  EXPECT_THROW(det_inner_closed(0, 1, 1, 1), DomainError);
  EXPECT_THROW(det_inner_closed(2, 1, 1, 0), DomainError);
  EXPECT_THROW(det_inner_closed(2, 1, 1, 4), DomainError);
}

TEST(M00Minor, ClosedFormMatchesElimination) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int r = 1; r <= a + 2; ++r)
          for (int s = 1; s <= b + 2; ++s) {
            const auto m = build_matrix_M({a, b, c, r, s, 1});
            EXPECT_EQ(det_m00_closed(a, b, c, r, s), det_elimination(minor(m, {0}, {0})))
                << a << b << c << r << s;
          }
}

TEST(M00Minor, BaseCaseIsTwoByTwo) {
  for (int b = 0; b <= 3; ++b)
    for (int c = 0; c <= 3; ++c)
      for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= b + 2; ++s) {
          const auto m = minor(build_matrix_M({1, b, c, r, s, 1}), {0}, {0});
          ASSERT_EQ(m.order(), 2u);
          EXPECT_EQ(det_m00_closed(1, b, c, r, s), m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
        }
}

TEST(M00Minor, RangeChecks) {
  EXPECT_THROW(det_m00_closed(1, 1, 1, 0, 1), DomainError);
  EXPECT_THROW(det_m00_closed(1, 1, 1, 4, 1), DomainError);
  EXPECT_THROW(det_m00_closed(1, 1, 1, 1, 4), DomainError);
}

TEST(FaultInjection, ShiftedFormulaDiffers) {
  int differing = 0;
  for_each_valid(1, 1, 1, [&](const HexagonParams& p) {
    try {
      if (detail::theorem1_value(p, 1) != count_theorem1(p)) ++differing;
    } catch (const std::logic_error&) {
      ++differing;
    }
  });
  EXPECT_GT(differing, 0);
}
