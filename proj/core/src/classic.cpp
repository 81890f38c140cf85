#include "cevian/classic.hpp"

#include "cevian/error.hpp"

namespace cevian::classic {

namespace {

Rational det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

void check_p1(const ProjectivePoint& p, const char* name) {
  if (p.size() != 2) {
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " must be a point of P^1");
  }
}

void check_triple(const CevianTriple& c) {
  check_p1(c.d, "d");
  check_p1(c.e, "e");
  check_p1(c.f, "f");
}

}  // namespace

std::string to_string(const RatioProduct& r) {
  switch (r.kind) {
    case RatioProduct::Kind::Finite: return cevian::to_string(r.value);
    case RatioProduct::Kind::Infinite: return "Infinite";
    case RatioProduct::Kind::Indeterminate: return "Indeterminate";
  }
  return {};
}

std::optional<Point2> CevaReport::common_point_affine() const {
  if (!common_point || is_zero((*common_point)[2])) return std::nullopt;
  const auto& p = *common_point;
  return Point2{p[0] / p[2], p[1] / p[2]};
}

Matrix3 embedding_transform(const Triangle2D& t) {
  Matrix3 m{{{t.a.x, t.b.x, t.c.x}, {t.a.y, t.b.y, t.c.y}, {Rational(1), Rational(1), Rational(1)}}};
  if (is_zero(det3(m))) throw Error(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
  return m;
}

std::array<Rational, 3> barycentric(const Triangle2D& t, const Point2& p) {
  const Matrix3 m = embedding_transform(t);
  const Rational det = det3(m);
  const std::array<Rational, 3> rhs{p.x, p.y, Rational(1)};
  // Cramer's rule, one column replaced at a time.
  std::array<Rational, 3> out;
  for (std::size_t col = 0; col < 3; ++col) {
    Matrix3 replaced = m;
    for (std::size_t row = 0; row < 3; ++row) replaced[row][col] = rhs[row];
    out[col] = det3(replaced) / det;
  }
  return out;
}

CevianTriple cevian_coordinates(const Triangle2D& t, const Point2& d, const Point2& e, const Point2& f) {
  const auto bd = barycentric(t, d);
  const auto be = barycentric(t, e);
  const auto bf = barycentric(t, f);
  if (!is_zero(bd[0])) throw Error(ErrorCode::PointNotOnSide, "D is not on line BC");
  if (!is_zero(be[1])) throw Error(ErrorCode::PointNotOnSide, "E is not on line AC");
  if (!is_zero(bf[2])) throw Error(ErrorCode::PointNotOnSide, "F is not on line AB");
  // (0, d0, d1), (e1, 0, e0), (f0, f1, 0).
  return CevianTriple{ProjectivePoint{bd[1], bd[2]}, ProjectivePoint{be[2], be[0]}, ProjectivePoint{bf[0], bf[1]}};
}

Rational concurrency_determinant(const CevianTriple& c) {
  check_triple(c);
  return c.d[0] * c.e[0] * c.f[0] - c.d[1] * c.e[1] * c.f[1];
}

RatioProduct ratio_product(const CevianTriple& c) {
  check_triple(c);
  const Rational num = c.d[0] * c.e[0] * c.f[0];
  const Rational den = c.d[1] * c.e[1] * c.f[1];
  if (is_zero(den)) {
    if (is_zero(num)) {
      throw Error(ErrorCode::IndeterminateRatio, "both d0e0f0 and d1e1f1 vanish; use the determinant form");
    }
    return {RatioProduct::Kind::Infinite, Rational(0)};
  }
  return {RatioProduct::Kind::Finite, num / den};
}

std::array<LinearSubspace, 3> cevian_planes(const CevianTriple& c) {
  check_triple(c);
  const Rational zero(0), one(1);
  const std::array<RationalVector, 2> pa{RationalVector{one, zero, zero}, RationalVector{zero, c.d[0], c.d[1]}};
  const std::array<RationalVector, 2> pb{RationalVector{zero, one, zero}, RationalVector{c.e[1], zero, c.e[0]}};
  const std::array<RationalVector, 2> pc{RationalVector{zero, zero, one}, RationalVector{c.f[0], c.f[1], zero}};
  return {LinearSubspace::from_vectors(2, pa), LinearSubspace::from_vectors(2, pb), LinearSubspace::from_vectors(2, pc)};
}

CevaReport check_ceva(const Triangle2D& t, const Point2& d, const Point2& e, const Point2& f) {
  const Matrix3 m = embedding_transform(t);
  CevaReport report{cevian_coordinates(t, d, e, f), {}, {}, false, std::nullopt};
  report.determinant = concurrency_determinant(report.feet);
  report.concurrent = is_zero(report.determinant);
  try {
    report.ratio_product = ratio_product(report.feet);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::IndeterminateRatio) throw;
    report.ratio_product = {RatioProduct::Kind::Indeterminate, Rational(0)};
  }

  const auto planes = cevian_planes(report.feet);
  if (const auto common = intersect(planes)) {
    if (const auto bary = common->as_point()) {
      RationalVector lifted(3);
      for (std::size_t row = 0; row < 3; ++row) {
        for (std::size_t col = 0; col < 3; ++col) lifted[row] += m[row][col] * (*bary)[col];
      }
      report.common_point = ProjectivePoint(std::move(lifted));
    }
  }
  return report;
}

}  // namespace cevian::classic
