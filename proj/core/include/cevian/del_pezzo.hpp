#pragma once

#include <array>
#include <optional>
#include <utility>

#include "cevian/projective.hpp"

/// The blowup S of P^2 at its three coordinate points, as a subvariety of
/// P^2 x (P^1)^3, and its isomorphic image H : d0 e0 f0 = d1 e1 f1 in (P^1)^3.
namespace cevian::del_pezzo {

/// (x, d, e, f) with x in P^2 and d, e, f in P^1.
struct SPoint {
  ProjectivePoint x;
  ProjectivePoint d;
  ProjectivePoint e;
  ProjectivePoint f;
};

struct HPoint {
  ProjectivePoint d;
  ProjectivePoint e;
  ProjectivePoint f;
};

/// Affine blowup of the plane at the origin: x a1 = a0 y.
bool affine_blowup_member(const Rational& x, const Rational& y, const ProjectivePoint& line);

/// Blowup of P^2 at O = (0:0:1): x0 y1 = x1 y0.
bool projective_blowup_member(const ProjectivePoint& x, const ProjectivePoint& line);

/// x1 d1 = x2 d0, x2 e1 = x0 e0, x0 f1 = x1 f0.
bool on_S(const ProjectivePoint& x, const ProjectivePoint& d, const ProjectivePoint& e, const ProjectivePoint& f);
inline bool on_S(const SPoint& s) { return on_S(s.x, s.d, s.e, s.f); }

/// d0 e0 f0 = d1 e1 f1.
bool on_H(const ProjectivePoint& d, const ProjectivePoint& e, const ProjectivePoint& f);
inline bool on_H(const HPoint& h) { return on_H(h.d, h.e, h.f); }

/// Forgets x. NotOnS when the tuple violates the incidence equations.
HPoint project_S_to_H(const SPoint& s);

/// Affine charts of S over H, tried in this order by lift_H_to_S. Each chart
/// fixes one x-coordinate to 1 and needs two of d, e, f coordinates nonzero.
enum class Chart {
  X2,  // d1 != 0, e0 != 0: x = (e1/e0 : d0/d1 : 1)
  X0,  // e1 != 0, f0 != 0: x = (1 : f1/f0 : e0/e1)
  X1,  // f1 != 0, d0 != 0: x = (f0/f1 : 1 : d1/d0)
};

inline constexpr std::array<Chart, 3> kChartOrder{Chart::X2, Chart::X0, Chart::X1};

/// x-coordinate in `chart`, or nullopt when the chart does not cover h.
std::optional<ProjectivePoint> lift_in_chart(const HPoint& h, Chart chart);

/// Unique x with (x, d, e, f) on S. NotInImage for ((1:0),(1:0),(1:0)) and
/// ((0:1),(0:1),(0:1)), which no chart covers; NotOnH otherwise off H.
SPoint lift_H_to_S(const HPoint& h);

/// The two triples that no point of S lies over.
bool is_excluded_point(const HPoint& h);

}  // namespace cevian::del_pezzo
