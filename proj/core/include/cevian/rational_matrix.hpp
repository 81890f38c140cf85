#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cevian/rational.hpp"

namespace cevian {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);
  std::vector<RationalVector> to_rows() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row space kept in reduced row echelon form while vectors are added one at a
/// time. Rows stay sorted by pivot column, every pivot is 1 and is the only
/// nonzero entry of its column, so two accumulators spanning the same space
/// hold identical rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Returns true when `v` was independent of the rows already present.
  bool add(std::span<const Rational> v);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == dim_; }
  const std::vector<RationalVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces `v` against the basis in place; the remainder is zero iff v is in the span.
  void reduce(std::span<Rational> v) const;
  bool contains(std::span<const Rational> v) const;

  /// Basis of the orthogonal complement {a : <a, row> = 0 for every row}.
  std::vector<RationalVector> annihilator() const;

 private:
  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const RationalMatrix& m);

/// Basis (as rows) of the null space {v : m v = 0}.
std::vector<RationalVector> kernel(const RationalMatrix& m);

/// Square matrices only.
Rational determinant(RationalMatrix m);

}  // namespace cevian
