#include "cevian/del_pezzo.hpp"

#include "cevian/error.hpp"

namespace cevian::del_pezzo {

namespace {

void require_dims(const ProjectivePoint& p, std::size_t dim, const char* name) {
  if (p.ambient_dim() != dim) {
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " must be a point of P^" + std::to_string(dim));
  }
}

void require_h_dims(const ProjectivePoint& d, const ProjectivePoint& e, const ProjectivePoint& f) {
  require_dims(d, 1, "d");
  require_dims(e, 1, "e");
  require_dims(f, 1, "f");
}

bool is_constant_triple(const HPoint& h, std::size_t zero_slot) {
  return is_zero(h.d[zero_slot]) && is_zero(h.e[zero_slot]) && is_zero(h.f[zero_slot]);
}

}  // namespace

bool affine_blowup_member(const Rational& x, const Rational& y, const ProjectivePoint& line) {
  require_dims(line, 1, "line");
  return x * line[1] == line[0] * y;
}

bool projective_blowup_member(const ProjectivePoint& x, const ProjectivePoint& line) {
  require_dims(x, 2, "x");
  require_dims(line, 1, "line");
  return x[0] * line[1] == x[1] * line[0];
}

bool on_S(const ProjectivePoint& x, const ProjectivePoint& d, const ProjectivePoint& e, const ProjectivePoint& f) {
  require_dims(x, 2, "x");
  require_h_dims(d, e, f);
  return x[1] * d[1] == x[2] * d[0] &&  //
         x[2] * e[1] == x[0] * e[0] &&  //
         x[0] * f[1] == x[1] * f[0];
}

bool on_H(const ProjectivePoint& d, const ProjectivePoint& e, const ProjectivePoint& f) {
  require_h_dims(d, e, f);
  return d[0] * e[0] * f[0] == d[1] * e[1] * f[1];
}

HPoint project_S_to_H(const SPoint& s) {
  if (!on_S(s)) {
    throw Error(ErrorCode::NotOnS, "x=" + to_string(s.x) + " d=" + to_string(s.d) + " e=" + to_string(s.e) +
                                       " f=" + to_string(s.f) + " violates the incidence equations");
  }
  return HPoint{s.d, s.e, s.f};
}

bool is_excluded_point(const HPoint& h) {
  // (1:0)^3 has every "1" slot zero, (0:1)^3 every "0" slot.
  return is_constant_triple(h, 1) || is_constant_triple(h, 0);
}

std::optional<ProjectivePoint> lift_in_chart(const HPoint& h, Chart chart) {
  require_h_dims(h.d, h.e, h.f);
  const Rational one(1);
  switch (chart) {
    case Chart::X2:
      if (is_zero(h.d[1]) || is_zero(h.e[0])) return std::nullopt;
      return ProjectivePoint{h.e[1] / h.e[0], h.d[0] / h.d[1], one}.normalized();
    case Chart::X0:
      if (is_zero(h.e[1]) || is_zero(h.f[0])) return std::nullopt;
      return ProjectivePoint{one, h.f[1] / h.f[0], h.e[0] / h.e[1]}.normalized();
    case Chart::X1:
      if (is_zero(h.f[1]) || is_zero(h.d[0])) return std::nullopt;
      return ProjectivePoint{h.f[0] / h.f[1], one, h.d[1] / h.d[0]}.normalized();
  }
  return std::nullopt;
}

SPoint lift_H_to_S(const HPoint& h) {
  require_h_dims(h.d, h.e, h.f);
  if (is_excluded_point(h)) {
    throw Error(ErrorCode::NotInImage, "d=" + to_string(h.d) + " e=" + to_string(h.e) + " f=" + to_string(h.f) +
                                           " is one of ((1:0),(1:0),(1:0)), ((0:1),(0:1),(0:1)); no point of S lies over it");
  }
  if (!on_H(h)) {
    throw Error(ErrorCode::NotOnH, "d0 e0 f0 != d1 e1 f1 for d=" + to_string(h.d) + " e=" + to_string(h.e) +
                                       " f=" + to_string(h.f));
  }
  for (Chart chart : kChartOrder) {
    if (auto x = lift_in_chart(h, chart)) return SPoint{std::move(*x), h.d, h.e, h.f};
  }
  // Unreachable: every non-excluded triple lies in some chart.
  throw Error(ErrorCode::NotInImage, "no chart covers the triple");
}

}  // namespace cevian::del_pezzo
