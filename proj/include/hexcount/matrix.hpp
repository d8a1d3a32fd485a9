#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hexcount/exact.hpp"

namespace hexcount {

/// Square matrix whose rows and columns remember the index they had in the
/// matrix they were cut from, so a minor can be addressed by original labels.
template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;

  explicit BasicMatrix(std::size_t order)
      : order_(order), entries_(order * order, T(0)), row_labels_(order), col_labels_(order) {
    std::iota(row_labels_.begin(), row_labels_.end(), 0);
    std::iota(col_labels_.begin(), col_labels_.end(), 0);
  }

  BasicMatrix(std::initializer_list<std::initializer_list<T>> rows) : BasicMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != order_) throw DomainError("matrix literal is not square");
      std::size_t j = 0;
      for (const auto& value : row) (*this)(i, j++) = value;
      ++i;
    }
  }

  static BasicMatrix identity(std::size_t order) {
    BasicMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t order() const noexcept { return order_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  const std::vector<int>& row_labels() const noexcept { return row_labels_; }
  const std::vector<int>& col_labels() const noexcept { return col_labels_; }

  BasicMatrix transposed() const {
    BasicMatrix m(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) m(j, i) = (*this)(i, j);
    m.row_labels_ = col_labels_;
    m.col_labels_ = row_labels_;
    return m;
  }

  /// Keeps the rows/columns at the given positions (strictly increasing).
  BasicMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    if (rows.size() != cols.size()) throw DomainError("submatrix must be square");
    BasicMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      m.row_labels_[i] = row_labels_[rows[i]];
      m.col_labels_[i] = col_labels_[cols[i]];
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    }
    return m;
  }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> entries_;
  std::vector<int> row_labels_;
  std::vector<int> col_labels_;
};

using CountMatrix = BasicMatrix<ExactInt>;

template <class T>
std::ostream& operator<<(std::ostream& os, const BasicMatrix<T>& m) {
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

namespace detail {

inline std::vector<std::size_t> keep_positions(const std::vector<int>& labels,
                                               std::span<const int> deleted, const char* axis) {
  for (int label : deleted) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      throw DomainError(std::string("unknown ") + axis + " label " + std::to_string(label));
    }
  }
  std::vector<int> unique(deleted.begin(), deleted.end());
  std::sort(unique.begin(), unique.end());
  if (std::adjacent_find(unique.begin(), unique.end()) != unique.end()) {
    throw DomainError(std::string("duplicate ") + axis + " label in deletion set");
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!std::binary_search(unique.begin(), unique.end(), labels[i])) keep.push_back(i);
  }
  return keep;
}

}  // namespace detail

/// A^U_V: deletes the rows labelled U and the columns labelled V.
template <class T>
BasicMatrix<T> minor(const BasicMatrix<T>& m, std::span<const int> delete_rows,
                     std::span<const int> delete_cols) {
  if (delete_rows.size() != delete_cols.size()) {
    throw DomainError("minor: deleting " + std::to_string(delete_rows.size()) + " rows but " +
                      std::to_string(delete_cols.size()) + " columns");
  }
  const auto rows = detail::keep_positions(m.row_labels(), delete_rows, "row");
  const auto cols = detail::keep_positions(m.col_labels(), delete_cols, "column");
  return m.submatrix(rows, cols);
}

template <class T>
BasicMatrix<T> minor(const BasicMatrix<T>& m, std::initializer_list<int> delete_rows,
                     std::initializer_list<int> delete_cols) {
  return minor(m, std::span<const int>(delete_rows.begin(), delete_rows.size()),
               std::span<const int>(delete_cols.begin(), delete_cols.size()));
}

/// Fraction-free (Bareiss) elimination. Every division is exact in the ring.
/// The 0x0 determinant is 1.
template <class T>
T det_elimination(const BasicMatrix<T>& m) {
  const std::size_t n = m.order();
  if (n == 0) return T(1);
  std::vector<T> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };

  bool negate = false;
  T previous_pivot(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = value / previous_pivot;
      }
      at(i, k) = T(0);
    }
    previous_pivot = at(k, k);
  }
  T det = at(n - 1, n - 1);
  return negate ? T(-det) : det;
}

template <class T>
struct CondensationResult {
  T value;
  /// Number of condensed entries whose interior divisor vanished and that
  /// were recomputed by elimination instead.
  std::size_t fallbacks = 0;
};

/// Dodgson condensation: repeatedly applies
///   det(A) det(A^{0,n}_{0,n}) = det(A^0_0) det(A^n_n) - det(A^0_n) det(A^n_0)
/// to all contiguous minors. A zero interior minor makes the division
/// impossible; that entry is then evaluated by det_elimination.
template <class T>
CondensationResult<T> det_condensation_detailed(const BasicMatrix<T>& m) {
  const std::size_t n = m.order();
  CondensationResult<T> result{T(1), 0};
  if (n == 0) return result;

  // current[i][j] = det of the contiguous (k+1)x(k+1) block at (i,j);
  // interior[i][j] = the same for size k-1 (all ones when k = 0).
  std::vector<T> current(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) current[i * n + j] = m(i, j);
  std::vector<T> interior((n + 1) * (n + 1), T(1));
  std::size_t interior_width = n + 1;

  for (std::size_t size = 1; size < n; ++size) {
    const std::size_t width = n - size + 1;  // side of `current`
    const std::size_t next_width = width - 1;
    std::vector<T> next(next_width * next_width);
    for (std::size_t i = 0; i < next_width; ++i) {
      for (std::size_t j = 0; j < next_width; ++j) {
        const T& divisor = interior[(i + 1) * interior_width + (j + 1)];
        if (divisor == 0) {
          std::vector<std::size_t> rows(size + 1);
          std::vector<std::size_t> cols(size + 1);
          std::iota(rows.begin(), rows.end(), i);
          std::iota(cols.begin(), cols.end(), j);
          next[i * next_width + j] = det_elimination(m.submatrix(rows, cols));
          ++result.fallbacks;
          continue;
        }
        T cross = current[i * width + j] * current[(i + 1) * width + (j + 1)] -
                  current[i * width + (j + 1)] * current[(i + 1) * width + j];
        next[i * next_width + j] = cross / divisor;
      }
    }
    interior = std::move(current);
    interior_width = width;
    current = std::move(next);
  }
  result.value = current[0];
  return result;
}

template <class T>
T det_condensation(const BasicMatrix<T>& m) {
  return det_condensation_detailed(m).value;
}

/// Checks the Desnanot-Jacobi identity on the first/last rows and columns,
/// with all five determinants computed by elimination.
template <class T>
bool verify_desnanot_jacobi(const BasicMatrix<T>& m) {
  const std::size_t n = m.order();
  if (n < 2) throw DomainError("Desnanot-Jacobi needs order >= 2");
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  const std::span<const std::size_t> head(all.data(), n - 1);
  const std::span<const std::size_t> tail(all.data() + 1, n - 1);
  const std::span<const std::size_t> middle(all.data() + 1, n - 2);

  const T whole = det_elimination(m);
  const T central = det_elimination(m.submatrix(middle, middle));
  const T drop_first = det_elimination(m.submatrix(tail, tail));
  const T drop_last = det_elimination(m.submatrix(head, head));
  const T first_row_last_col = det_elimination(m.submatrix(tail, head));
  const T last_row_first_col = det_elimination(m.submatrix(head, tail));
  return whole * central == drop_first * drop_last - first_row_last_col * last_row_first_col;
}

}  // namespace hexcount
