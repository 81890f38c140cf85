#pragma once

// Helpers and independent reference computations for the test suites. Nothing
// here calls into the library's linear algebra.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "cevian/projective.hpp"
#include "cevian/rational.hpp"

namespace cevian::testing {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

inline ProjectivePoint pt(std::initializer_list<std::int64_t> coords) {
  RationalVector v;
  for (auto c : coords) v.push_back(q(c));
  return ProjectivePoint(std::move(v));
}

using Rows = std::vector<std::vector<Rational>>;

// Plain Gaussian elimination with first-nonzero pivoting.
inline std::size_t naive_rank(Rows rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Laplace expansion along the first row.
inline Rational naive_det(const Rows& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Rows minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * naive_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

inline std::vector<Rational> cross(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline bool proportional(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

inline Rational small_rational(std::mt19937_64& rng, bool allow_zero = false) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  for (;;) {
    const int p = num(rng);
    if (p != 0 || allow_zero) return q(p, den(rng));
  }
}

inline ProjectivePoint random_point(std::mt19937_64& rng, std::size_t size, bool allow_zero = false) {
  for (;;) {
    RationalVector v;
    bool nonzero = false;
    for (std::size_t i = 0; i < size; ++i) {
      v.push_back(small_rational(rng, allow_zero));
      nonzero = nonzero || v.back() != 0;
    }
    if (nonzero) return ProjectivePoint(std::move(v));
  }
}

}  // namespace cevian::testing
