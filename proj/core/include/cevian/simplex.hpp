#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cevian/projective.hpp"
#include "cevian/rational_matrix.hpp"

/// Concurrency of cevian spans in an n-simplex. One point P_I is chosen in every
/// k-dimensional coordinate face <I> of P^n; the question is whether all spans
/// span(P_I, opposite face of I) pass through one point, equivalently whether
/// the partial matrix whose row I holds the coordinates of P_I can be completed
/// to rank one.
namespace cevian::simplex {

/// A choice of point in each of the C(n+1, k+1) faces of dimension k.
/// Faces are kept in lexicographic order; points()[r] belongs to faces()[r] and
/// lists its coordinates in increasing order of face members.
class FaceInstance {
 public:
  /// Entries may come in any order. Throws InvalidArgument for bad (n, k),
  /// missing or duplicated faces, or wrongly sized points.
  FaceInstance(int n, int k, std::vector<std::pair<IndexSet, ProjectivePoint>> entries);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<IndexSet>& faces() const noexcept { return faces_; }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }

  const ProjectivePoint& point(const IndexSet& face) const;
  /// x^I_j for j in I.
  const Rational& coordinate(const IndexSet& face, int j) const;
  /// Every coordinate of every P_I is nonzero.
  bool on_torus() const;

  FaceInstance with_point(const IndexSet& face, ProjectivePoint p) const;

  friend bool operator==(const FaceInstance&, const FaceInstance&) = default;

 private:
  std::size_t index_of(const IndexSet& face) const;

  int n_;
  int k_;
  std::vector<IndexSet> faces_;
  std::vector<ProjectivePoint> points_;
};

/// Number of k-faces, C(n+1, k+1).
std::size_t face_count(int n, int k);

/// Rows indexed by faces, n+1 columns; entry (I, j) is specified iff j in I.
class PartialMatrix {
 public:
  using Entry = std::optional<Rational>;

  PartialMatrix(int n, int k, std::vector<IndexSet> row_faces, std::vector<std::vector<Entry>> rows);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(n_) + 1; }
  const Entry& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const IndexSet& row_face(std::size_t r) const { return row_faces_[r]; }
  const std::vector<IndexSet>& row_faces() const noexcept { return row_faces_; }

  /// Specified entries of row r, in column order.
  ProjectivePoint row_point(std::size_t r) const;
  bool on_torus() const;

  friend bool operator==(const PartialMatrix&, const PartialMatrix&) = default;

 private:
  int n_;
  int k_;
  std::vector<IndexSet> row_faces_;
  std::vector<std::vector<Entry>> rows_;
};

/// Rows in lexicographic face order.
PartialMatrix build_matrix(const FaceInstance& inst);
/// Rows in `row_order`, which must be a permutation of inst.faces().
PartialMatrix build_matrix(const FaceInstance& inst, std::span<const IndexSet> row_order);
FaceInstance to_instance(const PartialMatrix& m);

/// Triple ratio (x^{ab}_0 / x^{ab}_1)(x^{bc}_0 / x^{bc}_1)(x^{ac}_1 / x^{ac}_0).
struct TripleWitness {
  int a;
  int b;
  int c;
  Rational product;
};

/// x^I_i x^J_j - x^I_j x^J_i for rows I before J and columns i < j, both in I and J.
struct MinorWitness {
  IndexSet row_i;
  IndexSet row_j;
  int col_i;
  int col_j;
  Rational value;
};

using Witness = std::variant<TripleWitness, MinorWitness>;

/// Every 2x2 minor with no unspecified entry, in row-pair then column-pair order.
std::vector<MinorWitness> specified_minors(const PartialMatrix& m);

/// Products for all a < b < c.
std::vector<TripleWitness> triple_products(const FaceInstance& inst);
/// The triples whose product differs from 1. WrongArity unless k == 1; OffTorus off the torus.
std::vector<TripleWitness> check_triples_k1(const FaceInstance& inst);

enum class Criterion { TripleRatios, Minors };
std::string_view to_string(Criterion c) noexcept;

struct ConcurrencyReport {
  bool verdict = false;
  Criterion criterion = Criterion::TripleRatios;
  std::vector<Witness> witnesses;
  std::optional<ProjectivePoint> common_point;
  std::optional<bool> oracle_agrees;
};

/// Triple ratios for k == 1, fully specified minors for k >= 2. OffTorus when
/// some coordinate vanishes.
ConcurrencyReport decide_concurrent(const FaceInstance& inst);
/// Same decision on a matrix whose rows may be in any order.
ConcurrencyReport decide_concurrent(const PartialMatrix& m);

/// Point x with x_0 = 1 whose projection to every row face matches that row.
/// Each x_j is read from the first row (in matrix order) containing {0, j}.
/// NotRankOneCompletable if some row disagrees.
ProjectivePoint complete_rank1(const PartialMatrix& m);

/// Every row filled in as the multiple of x that agrees with its specified entries.
RationalMatrix completed_matrix(const PartialMatrix& m, const ProjectivePoint& x);

/// span(P_I placed in <I>, <opposite face of I>), a projective (n-k)-plane.
LinearSubspace cevian_span(const FaceInstance& inst, const IndexSet& face);

/// Exact intersection of all cevian spans.
struct OracleResult {
  enum class Kind { Empty, Point, Subspace };
  Kind kind = Kind::Empty;
  std::optional<LinearSubspace> subspace;

  std::optional<ProjectivePoint> point() const;
};

/// Defined on every instance, on the torus or not.
OracleResult geometric_oracle(const FaceInstance& inst);

/// decide_concurrent followed by the oracle; fills oracle_agrees.
ConcurrencyReport decide_with_oracle(const FaceInstance& inst);

enum class InstanceKind { Positive, Perturbed };
std::string_view to_string(InstanceKind kind) noexcept;

/// Positive: projections of a random point with nonzero coordinates, each
/// rescaled by a random factor. Perturbed: the Positive instance for the same
/// seed with one specified coordinate multiplied by a random factor != 1.
FaceInstance random_instance(int n, int k, std::uint64_t seed, InstanceKind kind);

}  // namespace cevian::simplex
