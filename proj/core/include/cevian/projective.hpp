#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cevian/rational.hpp"
#include "cevian/rational_matrix.hpp"

namespace cevian {

/// A point of P^m given by m+1 homogeneous coordinates. Equality is up to a
/// nonzero global scalar.
class ProjectivePoint {
 public:
  /// Throws InvalidPoint when `coords` is empty or identically zero.
  explicit ProjectivePoint(RationalVector coords);
  ProjectivePoint(std::initializer_list<Rational> coords) : ProjectivePoint(RationalVector(coords)) {}

  /// m, for a point of P^m.
  std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::span<const Rational> coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// Scalar multiple whose first nonzero coordinate is 1.
  ProjectivePoint normalized() const;
  ProjectivePoint scaled(const Rational& factor) const;

  bool has_zero_coordinate() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  RationalVector coords_;
};

inline ProjectivePoint normalize(const ProjectivePoint& p) { return p.normalized(); }

/// "(1:2:3)", or "(1/2:-3)" with rational entries.
std::string to_string(const ProjectivePoint& p);

/// Strictly increasing set of coordinate indices.
class IndexSet {
 public:
  /// Throws InvalidIndexSet unless members are strictly increasing and nonnegative.
  explicit IndexSet(std::vector<int> members);
  IndexSet(std::initializer_list<int> members) : IndexSet(std::vector<int>(members)) {}

  std::span<const int> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  int operator[](std::size_t i) const { return members_[i]; }

  bool contains(int j) const;
  /// Position of `j` within the set, if present.
  std::optional<std::size_t> position_of(int j) const;
  bool is_subset_of(const IndexSet& other) const;

  /// Throws InvalidIndexSet if a member exceeds n.
  void check_within(int n) const;

  // Lexicographic; the order used for rows of the face matrix.
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> members_;
};

std::string to_string(const IndexSet& set);

IndexSet set_intersection(const IndexSet& a, const IndexSet& b);

/// All subsets of {0..n} with `size` elements, in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int size);

/// Projective linear subspace of P^m stored as the row space of a basis kept in
/// reduced row echelon form, so equal subspaces compare equal structurally.
class LinearSubspace {
 public:
  /// Spans `vectors` (need not be independent). Throws InvalidArgument if they span {0}.
  static LinearSubspace from_vectors(std::size_t ambient_dim, std::span<const RationalVector> vectors);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  int proj_dim() const noexcept { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<RationalVector>& basis() const noexcept { return basis_; }

  bool contains(const ProjectivePoint& p) const;
  bool contains(const LinearSubspace& other) const;
  /// The point itself when proj_dim() == 0.
  std::optional<ProjectivePoint> as_point() const;
  /// Linear forms vanishing on the subspace (a basis of the orthogonal complement).
  std::vector<RationalVector> annihilator() const;

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

 private:
  LinearSubspace(std::size_t ambient_dim, std::vector<RationalVector> basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  std::size_t ambient_dim_;
  std::vector<RationalVector> basis_;
};

/// <I>: the subspace of P^n where every x_j with j outside I vanishes.
LinearSubspace coordinate_subspace(const IndexSet& face, int n);

/// Complement of `face` in {0..n}; throws InvalidIndexSet for empty or full faces.
IndexSet opposite_face(const IndexSet& face, int n);

using SpanItem = std::variant<ProjectivePoint, LinearSubspace>;

/// Smallest linear subspace containing every item; DimensionMismatch when ambient dims differ.
LinearSubspace span(std::span<const SpanItem> items);
inline LinearSubspace span(std::initializer_list<SpanItem> items) {
  return span(std::span<const SpanItem>(items.begin(), items.size()));
}

/// Exact intersection; std::nullopt when only the zero vector is common.
std::optional<LinearSubspace> intersect(std::span<const LinearSubspace> subspaces);
inline std::optional<LinearSubspace> intersect(std::initializer_list<LinearSubspace> subspaces) {
  return intersect(std::span<const LinearSubspace>(subspaces.begin(), subspaces.size()));
}

/// pi_I: keeps the coordinates indexed by `face`. ProjectionUndefined when they are all zero.
ProjectivePoint project(const ProjectivePoint& p, const IndexSet& face);

/// Places a point of P^k (coordinates ordered like `face`) into <face> inside P^n.
ProjectivePoint embed(const ProjectivePoint& local, const IndexSet& face, int n);

}  // namespace cevian
