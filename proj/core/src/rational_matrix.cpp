#include "cevian/rational_matrix.hpp"

#include <algorithm>
#include <utility>

#include "cevian/error.hpp"

namespace cevian {

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<RationalVector> RationalMatrix::to_rows() const {
  std::vector<RationalVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto span = row(r);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

void EchelonBasis::reduce(std::span<Rational> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (is_zero(v[p])) continue;
    const Rational factor = v[p];
    const auto& row = rows_[i];
    for (std::size_t c = p; c < dim_; ++c) {
      if (!is_zero(row[c])) v[c] -= factor * row[c];
    }
  }
}

bool EchelonBasis::contains(std::span<const Rational> v) const {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from basis dimension");
  RationalVector work(v.begin(), v.end());
  reduce(work);
  return std::all_of(work.begin(), work.end(), [](const Rational& x) { return is_zero(x); });
}

bool EchelonBasis::add(std::span<const Rational> v) {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from basis dimension");
  if (full()) return false;
  RationalVector work(v.begin(), v.end());
  reduce(work);
  const auto it = std::find_if(work.begin(), work.end(), [](const Rational& x) { return !is_zero(x); });
  if (it == work.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - work.begin());
  const Rational lead = *it;
  for (std::size_t c = pivot; c < dim_; ++c) work[c] /= lead;

  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    if (is_zero(row[pivot])) continue;
    const Rational factor = row[pivot];
    for (std::size_t c = pivot; c < dim_; ++c) {
      if (!is_zero(work[c])) row[c] -= factor * work[c];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(work));
  return true;
}

std::vector<RationalVector> EchelonBasis::annihilator() const {
  // Free columns parametrise the complement: for each free column f the vector
  // with 1 at f and -row[f] at each pivot position.
  std::vector<bool> is_pivot(dim_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (is_pivot[f]) continue;
    RationalVector a(dim_);
    a[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) a[pivots_[i]] = -rows_[i][f];
    out.push_back(std::move(a));
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.add(m.row(r));
  return basis.rank();
}

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.add(m.row(r));
  return basis.annihilator();
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

}  // namespace cevian
