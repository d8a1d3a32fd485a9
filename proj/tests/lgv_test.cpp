#include <gtest/gtest.h>

#include <random>

#include "hexcount/lgv.hpp"
#include "hexcount/matrix.hpp"
#include "hexcount/oracle.hpp"

using namespace hexcount;

namespace {

// Cofactor expansion along the first row.
ExactInt cofactor_det(const CountMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  ExactInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    const ExactInt term = m(0, j) * cofactor_det(m.submatrix(rows, cols));
    total += (j % 2 == 0) ? term : ExactInt(-term);
  }
  return total;
}

CountMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  CountMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(PointConfiguration, SmallestInstance) {
  const auto cfg = build_point_configuration({0, 0, 0, 1, 1, 1});
  // P_0 = (0, c+2-t), P_1 = (a+b+2-s, a+c+2); Q_j = (b+j+[j>=r], j+[j>=r])
  const std::vector<LatticePoint> starts{{0, 1}, {1, 2}};
  const std::vector<LatticePoint> ends{{0, 0}, {2, 2}};
  EXPECT_EQ(cfg.starts, starts);
  EXPECT_EQ(cfg.ends, ends);
}

TEST(PointConfiguration, MatchesPathFigure) {
  const auto cfg = build_point_configuration({2, 1, 1, 2, 2, 1});
  const std::vector<LatticePoint> starts{{0, 2}, {0, 4}, {1, 5}, {3, 5}};
  const std::vector<LatticePoint> ends{{1, 0}, {2, 1}, {4, 3}, {5, 4}};
  EXPECT_EQ(cfg.starts, starts);
  EXPECT_EQ(cfg.ends, ends);
}

TEST(PointConfiguration, SizeAndValidation) {
  for_each_valid(3, 2, 2, [](const HexagonParams& p) {
    const auto cfg = build_point_configuration(p);
    EXPECT_EQ(cfg.starts.size(), static_cast<std::size_t>(p.a + 2));
    EXPECT_EQ(cfg.ends.size(), static_cast<std::size_t>(p.a + 2));
  });
  try {
    build_point_configuration({0, 0, 0, 9, 1, 1});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("parameter r"), std::string::npos);
  }
  EXPECT_THROW(build_point_configuration({1, 0, 0, 1, 3, 1}), DomainError);
  EXPECT_THROW(build_point_configuration({1, 0, 0, 1, 1, 0}), DomainError);
}

TEST(CountPaths, Examples) {
  EXPECT_EQ(count_paths({0, 0}, {0, 0}), 1);
  EXPECT_EQ(count_paths({0, 2}, {2, 0}), 6);
  EXPECT_EQ(count_paths({0, 0}, {-1, 0}), 0);
  EXPECT_EQ(count_paths({0, 0}, {0, 1}), 0);
}

TEST(MatrixM, SmallestInstance) {
  // last row: C(c+s, j+chi-a-2+s) gives C(1,-1)=0 then C(1,1)=1; P_1=(1,2) cannot reach Q_0=(0,0)
  const CountMatrix expected{{1, 0}, {0, 1}};
  EXPECT_EQ(count_paths({1, 2}, {0, 0}), 0);
  EXPECT_EQ(build_matrix_M({0, 0, 0, 1, 1, 1}), expected);
}

TEST(MatrixM, EntriesArePathCounts) {
  for_each_valid(3, 3, 3, [](const HexagonParams& p) {
    EXPECT_EQ(build_matrix_M(p), path_count_matrix(build_point_configuration(p))) << to_string(p);
  });
}

TEST(Minor, LabelsAndShapes) {
  const CountMatrix m = build_matrix_M({3, 1, 1, 2, 2, 2});
  EXPECT_EQ(minor(m, {}, {}), m);
  const CountMatrix empty = minor(m, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4});
  EXPECT_EQ(empty.order(), 0u);
  EXPECT_EQ(det_elimination(empty), 1);
  const CountMatrix inner = minor(m, {0, 4}, {0, 4});
  EXPECT_EQ(inner.order(), 3u);
  EXPECT_EQ(inner.row_labels(), (std::vector<int>{1, 2, 3}));
  // labels survive a second cut
  const CountMatrix twice = minor(inner, {2}, {3});
  EXPECT_EQ(twice.row_labels(), (std::vector<int>{1, 3}));
  EXPECT_EQ(twice.col_labels(), (std::vector<int>{1, 2}));
  EXPECT_EQ(twice(0, 0), m(1, 1));
  EXPECT_EQ(twice(1, 1), m(3, 2));
  EXPECT_THROW(minor(m, {0}, {}), DomainError);
  EXPECT_THROW(minor(m, {7}, {0}), DomainError);
  EXPECT_THROW(minor(inner, {0}, {1}), DomainError);  // label 0 is already gone
  EXPECT_THROW(minor(m, {1, 1}, {0, 2}), DomainError);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(det_elimination(CountMatrix::identity(4)), 1);
  EXPECT_EQ(det_elimination(CountMatrix{{1, 0}, {1, 1}}), 1);
  EXPECT_EQ(det_condensation(CountMatrix{{7}}), 7);
  EXPECT_EQ(det_condensation(CountMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(det_elimination(CountMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det_elimination(CountMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Determinant, EliminationMatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 4);
    EXPECT_EQ(det_elimination(m), cofactor_det(m));
  }
  // sparse matrices force pivot swaps
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 5, -1, 1);
    EXPECT_EQ(det_elimination(m), cofactor_det(m));
  }
}

TEST(Determinant, CondensationMatchesElimination) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 6, -2, 2);
    EXPECT_EQ(det_condensation(m), det_elimination(m));
  }
  for_each_valid(2, 2, 2, [](const HexagonParams& p) {
    const auto m = build_matrix_M(p);
    EXPECT_EQ(det_condensation(m), det_elimination(m)) << to_string(p);
  });
}

TEST(Determinant, CondensationFallsBackOnZeroInterior) {
  const CountMatrix m{{1, 2, 3}, {4, 0, 6}, {7, 8, 9}};  // central entry 0
  const auto result = det_condensation_detailed(m);
  EXPECT_EQ(result.value, det_elimination(m));
  EXPECT_EQ(result.value, 60);
  EXPECT_GT(result.fallbacks, 0u);
  EXPECT_EQ(det_condensation(CountMatrix::identity(5)), 1);
}

TEST(Determinant, RowScalingAndTranspose) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_matrix(rng, 5);
    EXPECT_EQ(det_elimination(m), det_elimination(m.transposed()));
    const ExactInt before = det_elimination(m);
    const int k = trial - 25;
    for (std::size_t j = 0; j < 5; ++j) m(2, j) *= k;
    EXPECT_EQ(det_elimination(m), before * k);
  }
}

TEST(DesnanotJacobi, HoldsUniversally) {
  EXPECT_TRUE(verify_desnanot_jacobi(CountMatrix::identity(3)));
  EXPECT_TRUE(verify_desnanot_jacobi(build_matrix_M({1, 1, 1, 1, 1, 1})));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) EXPECT_TRUE(verify_desnanot_jacobi(random_matrix(rng, 4)));
  EXPECT_THROW(verify_desnanot_jacobi(CountMatrix{{1}}), DomainError);
}

TEST(Lgv, DeterminantCountsFamilies) {
  Budget budget;
  for_each_valid(2, 2, 2, [&](const HexagonParams& p) {
    EXPECT_EQ(det_elimination(build_matrix_M(p)), enumerate_path_families(p, budget)) << to_string(p);
  });
}
