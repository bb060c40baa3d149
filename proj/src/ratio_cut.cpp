// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/ratio_cut.hpp"

#include <cmath>
#include <string>

namespace ratiocut {

namespace {

void require_cut_range(const CutParams& cut) {
  if (!(cut.q >= 0 && cut.q <= 1 && cut.p >= 0 && cut.p <= 1))
    throw DomainError("cut abscissae must lie in [0,1]");
  if (!(std::fabs(cut.theta) < num::pi_v<double>))
    throw DomainError("cut opening angle must satisfy |theta| < pi");
}

// Openings below this leave the supporting circle's radius so large that
// the arc parametrization has less precision than the sagitta; such cuts
// are geometrically straight.
constexpr double kStraightTheta = 1e-6;

// The cut curve has to stay strictly between the boundary curves; a cut
// that leaves the domain is an error, never silently clipped. Numerically
// straight cuts are sampled along the chord.
void require_arc_inside(const DomainParams& s, const CutParams& cut,
                        const EvalOptions& opts) {
  if (!opts.check_arc_inside) return;
  const Vec2 p0{cut.q, y_bottom<double>(s, cut.q)};
  const Vec2 p1{cut.p, y_top<double>(s, cut.p)};
  const bool straight = std::fabs(cut.theta) < kStraightTheta;
  const ArcGeometry g =
      straight ? ArcGeometry{} : circle_through(p0, p1, cut.theta);
  const double tol = 1e-9;
  const int n = opts.arc_samples;
  for (int i = 1; i < n; ++i) {
    const double t = double(i) / n;
    const Vec2 pt = straight ? p0 + t * (p1 - p0) : arc_point(g, t);
    if (pt.x < -tol || pt.x > 1 + tol)
      throw GeometryError("cut arc exits the domain through a side wall");
    const double x = std::clamp(pt.x, 0.0, 1.0);
    if (pt.y > y_top<double>(s, x) + tol || pt.y < y_bottom<double>(s, x) - tol)
      throw GeometryError("cut arc exits the domain through a boundary curve");
  }
}

}  // namespace

double chord_length(const DomainParams& s, const CutParams& cut) {
  require_cut_range(cut);
  const double c = std::hypot(cut.p - cut.q,
                              y_top<double>(s, cut.p) - y_bottom<double>(s, cut.q));
  if (!(c > 0)) throw GeometryError("degenerate cut chord");
  return c;
}

double left_area(const DomainParams& s, const CutParams& cut,
                 const EvalOptions& opts) {
  s.require_gate(opts.gate);
  require_cut_range(cut);
  require_arc_inside(s, cut, opts);
  return double(rc_parts_raw<double>(s, cut.q, cut.p, cut.theta).area_left);
}

RatioCutBreakdown ratio_cut(const DomainParams& s, const CutParams& cut,
                            const EvalOptions& opts) {
  s.require_gate(opts.gate);
  require_cut_range(cut);
  require_arc_inside(s, cut, opts);

  const RcParts<double> parts = rc_parts_raw<double>(s, cut.q, cut.p, cut.theta);
  if (!(parts.chord > 0)) throw GeometryError("degenerate cut chord");
  if (!(parts.area_left > 0) || !(parts.area_right > 0))
    throw GeometryError("cut leaves a region of non-positive area");

  RatioCutBreakdown b;
  b.chord = parts.chord;
  b.cut_length = parts.arc_len;
  b.area_left = parts.area_left;
  b.area_right = parts.area_right;
  b.normalization = opts.normalization;
  b.value = parts.arc_len / (parts.area_left * parts.area_right);
  if (opts.normalization == Normalization::area_weighted) b.value *= parts.total;
  if (std::fabs(cut.theta) >= kStraightTheta) {
    b.arc = circle_through({cut.q, y_bottom<double>(s, cut.q)},
                           {cut.p, y_top<double>(s, cut.p)}, cut.theta);
  }
  return b;
}

RectangleCut rectangle_ratio_cut(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw DomainError("rectangle sides must be positive");
  RectangleCut r;
  const double hi = std::max(a, b);
  // midline across the longer side: |Gamma| = shorter side, areas (a*b/2)^2,
  // so |Gamma| * |Omega| / (|S| |Omega \ S|) = 4 / longer side
  r.value = 4.0 / hi;
  r.vertical = a >= b;
  r.position = hi / 2.0;
  r.degenerate = (a == b);
  return r;
}

double excess_area_bound(double chord, double perimeter_excess, double eps0,
                         double eps1) {
  if (!(chord > 0)) throw DomainError("excess_area_bound: chord must be positive");
  if (perimeter_excess < 0)
    throw DomainError("excess_area_bound: negative perimeter excess");
  if (perimeter_excess > 2 * eps1 * chord)
    throw GateError("excess_area_bound: excess outside the small-perimeter regime");
  return (1.0 + eps0) / std::sqrt(6.0) * std::pow(chord, 1.5) *
         std::sqrt(perimeter_excess);
}

}  // namespace ratiocut
