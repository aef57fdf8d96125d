#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgv/mpoly.hpp"

namespace cgv {

/// Rectangular matrix over the polynomial ring; dimensions are fixed at construction.
class RingMatrix {
 public:
  RingMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged input.
  explicit RingMatrix(std::vector<std::vector<MPoly>> rows);

  static RingMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const MPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, MPoly value) { entries_[i * cols_ + j] = std::move(value); }

  bool is_scalar() const;
  RingMatrix specialize(Var v, const NFElem& value) const;
  RingMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;
  RingMatrix with_rows_swapped(std::size_t a, std::size_t b) const;
  std::vector<MPoly> row(std::size_t i) const;

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

  /// "[[a, b], [c, d]]" with canonical entries.
  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MPoly> entries_;
};

/// Determinant by cofactor expansion. Throws std::invalid_argument for
/// non-square input or size above 6.
MPoly matrix_det(const RingMatrix& m);

struct RankResult {
  std::size_t rank = 0;
  /// Row and column indices of a nonzero rank x rank minor.
  std::vector<std::size_t> witness_rows;
  std::vector<std::size_t> witness_cols;
};

/// Rank over Q(r) when every entry is a constant (after optionally fixing m),
/// otherwise over the fraction field of the polynomial ring: the largest k with
/// a k x k minor that is a nonzero polynomial.
RankResult matrix_rank(const RingMatrix& m, const std::optional<NFElem>& m_value = std::nullopt);

/// Basis of the right kernel of a scalar matrix, one vector per free column.
/// Throws std::invalid_argument if an entry is not constant.
std::vector<std::vector<NFElem>> kernel_basis(const RingMatrix& m);

}  // namespace cgv
