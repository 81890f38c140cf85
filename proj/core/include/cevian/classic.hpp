#pragma once

#include <array>
#include <optional>

#include "cevian/projective.hpp"
#include "cevian/rational.hpp"

/// The planar Ceva test. A Euclidean triangle is lifted to the z = 1 slice of
/// Q^3 and moved onto the coordinate triangle of P^2, so each cevian foot
/// becomes a point of a coordinate line and concurrency becomes the vanishing
/// of a 3x3 determinant.
namespace cevian::classic {

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Triangle2D {
  Point2 a;
  Point2 b;
  Point2 c;
};

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// Feet of the three cevians in their coordinate lines: D = (0:d0:d1) on BC,
/// E = (e1:0:e0) on AC, F = (f0:f1:0) on AB. Each member is a point of P^1.
struct CevianTriple {
  ProjectivePoint d;
  ProjectivePoint e;
  ProjectivePoint f;
};

/// d0 e0 f0 / (d1 e1 f1). Infinite when only the denominator vanishes.
struct RatioProduct {
  enum class Kind { Finite, Infinite, Indeterminate };
  Kind kind = Kind::Finite;
  Rational value;  // meaningful for Finite only

  bool is_one() const { return kind == Kind::Finite && value == 1; }
};

std::string to_string(const RatioProduct& r);

struct CevaReport {
  CevianTriple feet;
  RatioProduct ratio_product;
  Rational determinant;
  bool concurrent = false;
  /// Common point of the three cevians in lifted plane coordinates (X:Y:Z),
  /// found by intersecting the cevian planes. Z == 0 means the cevians are
  /// parallel (feet on extended sides).
  std::optional<ProjectivePoint> common_point;

  /// (X/Z, Y/Z) when the common point is affine.
  std::optional<Point2> common_point_affine() const;
};

/// Rows (a1,b1,c1), (a2,b2,c2), (1,1,1). DegenerateTriangle when det T == 0.
Matrix3 embedding_transform(const Triangle2D& t);

/// T^{-1} (x, y, 1): barycentric coordinates of a plane point, summing to 1.
std::array<Rational, 3> barycentric(const Triangle2D& t, const Point2& p);

/// PointNotOnSide when a foot misses its side line (extended sides are fine).
CevianTriple cevian_coordinates(const Triangle2D& t, const Point2& d, const Point2& e, const Point2& f);

/// d0 e0 f0 - d1 e1 f1. Only its vanishing is meaningful.
Rational concurrency_determinant(const CevianTriple& c);

/// Throws IndeterminateRatio when both monomials vanish.
RatioProduct ratio_product(const CevianTriple& c);

/// The three cevian planes through the origin of Q^3 in barycentric coordinates:
/// span{e0, (0,d0,d1)}, span{e1, (e1,0,e0)}, span{e2, (f0,f1,0)}.
std::array<LinearSubspace, 3> cevian_planes(const CevianTriple& c);

CevaReport check_ceva(const Triangle2D& t, const Point2& d, const Point2& e, const Point2& f);

}  // namespace cevian::classic
