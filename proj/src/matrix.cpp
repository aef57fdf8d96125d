#include "cgv/matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cgv {
namespace {

constexpr std::size_t kMaxCofactorSize = 6;

MPoly cofactor_det(const RingMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return MPoly(1);
  MPoly acc;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MPoly& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    const std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    MPoly minor = cofactor_det(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (minor.is_zero()) continue;
    if (k % 2 == 0) {
      acc += entry * minor;
    } else {
      acc -= entry * minor;
    }
  }
  return acc;
}

std::vector<std::vector<NFElem>> to_scalars(const RingMatrix& m) {
  std::vector<std::vector<NFElem>> a(m.rows(), std::vector<NFElem>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_constant()) throw std::invalid_argument("matrix entry is not a scalar");
      a[i][j] = m(i, j).constant_term();
    }
  }
  return a;
}

struct Echelon {
  std::vector<std::vector<NFElem>> rref;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> pivot_rows;  // original row index of each pivot
};

Echelon reduce(std::vector<std::vector<NFElem>> a, std::size_t cols) {
  Echelon out;
  std::vector<std::size_t> origin(a.size());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    std::swap(origin[p], origin[r]);
    const NFElem inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const NFElem f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivot_cols.push_back(c);
    out.pivot_rows.push_back(origin[r]);
    ++r;
  }
  out.rref = std::move(a);
  return out;
}

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RingMatrix::RingMatrix(std::vector<std::vector<MPoly>> rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto& e : row) entries_.push_back(std::move(e));
  }
}

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, MPoly(1));
  return out;
}

bool RingMatrix::is_scalar() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const MPoly& e) { return e.is_constant(); });
}

RingMatrix RingMatrix::specialize(Var v, const NFElem& value) const {
  RingMatrix out = *this;
  const auto sub = Substitution().set(v, MPoly(value));
  for (auto& e : out.entries_) e = mp_substitute(e, sub);
  return out;
}

RingMatrix RingMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
  RingMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) out.set(i, j, (*this)(row_idx[i], col_idx[j]));
  }
  return out;
}

RingMatrix RingMatrix::with_rows_swapped(std::size_t a, std::size_t b) const {
  RingMatrix out = *this;
  for (std::size_t j = 0; j < cols_; ++j) {
    std::swap(out.entries_[a * cols_ + j], out.entries_[b * cols_ + j]);
  }
  return out;
}

std::vector<MPoly> RingMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::string RingMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

MPoly matrix_det(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() > kMaxCofactorSize) throw std::invalid_argument("cofactor determinant limited to size 6");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_det(m, cols, 0);
}

RankResult matrix_rank(const RingMatrix& m, const std::optional<NFElem>& m_value) {
  const RingMatrix a = m_value ? m.specialize(Var::m, *m_value) : m;
  if (a.is_scalar()) {
    auto e = reduce(to_scalars(a), a.cols());
    RankResult out{e.pivot_cols.size(), e.pivot_rows, e.pivot_cols};
    std::sort(out.witness_rows.begin(), out.witness_rows.end());
    return out;
  }
  for (std::size_t k = std::min({a.rows(), a.cols(), kMaxCofactorSize}); k > 0; --k) {
    RankResult found;
    const bool hit = for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (matrix_det(a.submatrix(rows, cols)).is_zero()) return false;
        found = {k, rows, cols};
        return true;
      });
    });
    if (hit) return found;
  }
  return {};
}

std::vector<std::vector<NFElem>> kernel_basis(const RingMatrix& m) {
  const auto e = reduce(to_scalars(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<NFElem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<NFElem> v(m.cols());
    v[free] = NFElem(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cgv
