// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/arc_approx.hpp"

#include <cmath>
#include <vector>

namespace ratiocut {

CurvaturePair curvature_from_arc(double a1, double a2, double a3,
                                 double theta_t, double theta_b) {
  if (!(std::fabs(theta_t) < num::pi_v<double> / 2) ||
      !(std::fabs(theta_b) < num::pi_v<double> / 2))
    throw DomainError("curvature_from_arc: |theta| must be < pi/2");
  const double dt = a1 - a2;
  return {-(1.0 + dt * dt) / 2.0 * theta_t, (1.0 + a3 * a3) / 2.0 * theta_b};
}

namespace {

// Boundary arc through the two corner points. For a left-to-right chord the
// circle_through convention bulges downward at positive opening, so the top
// curve (outward = up) takes the negated angle.
BoundaryCurve boundary_arc(Vec2 a, Vec2 b, double theta, bool top) {
  if (theta == 0) return BoundaryCurve::segment(a, b);
  return BoundaryCurve::arc(circle_through(a, b, top ? -theta : theta));
}

}  // namespace

BoundaryCurve CircularTrapezoid::top() const {
  return boundary_arc({0, 0.5 + a1}, {1, 0.5 + a2}, theta_t, true);
}

BoundaryCurve CircularTrapezoid::bottom() const {
  return boundary_arc({0, 0}, {1, a3}, theta_b, false);
}

double CircularTrapezoid::y_top(double x) const { return curve_eval(top(), x); }
double CircularTrapezoid::y_bottom(double x) const {
  return curve_eval(bottom(), x);
}

double CircularTrapezoid::total_area() const {
  std::vector<BoundaryCurve> loop;
  loop.push_back(bottom());
  loop.push_back(BoundaryCurve::segment({1, a3}, {1, 0.5 + a2}));
  loop.push_back(top().reversed());
  loop.push_back(BoundaryCurve::segment({0, 0.5 + a1}, {0, 0}));
  return stokes_area(loop);
}

double CircularTrapezoid::left_area(const CutParams& cut) const {
  const BoundaryCurve bot = bottom();
  const BoundaryCurve topc = top();
  const double tq = curve_param_at_x(bot, cut.q);
  const double tp = curve_param_at_x(topc, cut.p);
  const Vec2 p0 = bot.point(tq);
  const Vec2 p1 = topc.point(tp);
  // loop along bottom [0,q], straight chord, top [p,0] reversed, left side;
  // the cut's cap enters as the signed segment area on top of the chord.
  double area = bot.restricted(bot.t0, tq).stokes() +
                BoundaryCurve::segment(p0, p1).stokes() +
                topc.restricted(topc.t0, tp).reversed().stokes() +
                BoundaryCurve::segment({0, 0.5 + a1}, {0, 0}).stokes();
  return area + cap_area<double>(norm(p1 - p0), cut.theta);
}

double CircularTrapezoid::ratio_cut_value(const CutParams& cut) const {
  const double chord =
      norm(Vec2{cut.p, y_top(cut.p)} - Vec2{cut.q, y_bottom(cut.q)});
  const double al = left_area(cut);
  const double ar = total_area() - al;
  if (!(al > 0) || !(ar > 0))
    throw GeometryError("circular trapezoid: cut leaves non-positive area");
  return arc_length<double>(chord, cut.theta) / (al * ar);
}

namespace {

struct GapSample {
  double rc = 0;
  double area = 0;
};

GapSample gaps_at(double a1, double a2, double a3, double tt, double tb,
                  const CutParams& cut) {
  CircularTrapezoid c{a1, a2, a3, tt, tb};
  const CurvaturePair eps = curvature_from_arc(a1, a2, a3, tt, tb);
  DomainParams p{a1, a2, a3, eps.eps_t, eps.eps_b, 0, 0};
  GapSample g;
  g.area = std::fabs(c.total_area() - base_area<double>(p));
  g.rc = std::fabs(c.ratio_cut_value(cut) -
                   double(rc_value_raw<double>(p, cut.q, cut.p, cut.theta)));
  return g;
}

double loglog_slope(const std::vector<double>& th, const std::vector<double>& g) {
  // least-squares slope of log g against log theta; 0 if any gap vanished
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = int(th.size());
  for (int i = 0; i < n; ++i) {
    if (!(g[i] > 0)) return 0;
    const double x = std::log(th[i]), y = std::log(g[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (std::fabs(denom) < 1e-30) return 0;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

GapReport parabolic_circular_gap(double a1, double a2, double a3,
                                 double theta_t, double theta_b,
                                 const CutParams& cut) {
  GapReport rep;
  CircularTrapezoid c{a1, a2, a3, theta_t, theta_b};
  const CurvaturePair eps = curvature_from_arc(a1, a2, a3, theta_t, theta_b);
  DomainParams p{a1, a2, a3, eps.eps_t, eps.eps_b, 0, 0};

  constexpr int kSamples = 501;
  for (int i = 0; i <= kSamples; ++i) {
    const double x = double(i) / kSamples;
    rep.sup_gap_top =
        std::max(rep.sup_gap_top, std::fabs(c.y_top(x) - y_top<double>(p, x)));
    rep.sup_gap_bottom = std::max(
        rep.sup_gap_bottom, std::fabs(c.y_bottom(x) - y_bottom<double>(p, x)));
  }
  rep.total_area_gap = std::fabs(c.total_area() - base_area<double>(p));
  rep.left_area_gap =
      std::fabs(c.left_area(cut) -
                double(rc_parts_raw<double>(p, cut.q, cut.p, cut.theta).area_left));
  rep.rc_gap = std::fabs(c.ratio_cut_value(cut) -
                         double(rc_value_raw<double>(p, cut.q, cut.p, cut.theta)));

  if (theta_t != 0 || theta_b != 0) {
    std::vector<double> scale, rcg, areag;
    for (double f : {1.0, 0.5, 0.25}) {
      const GapSample g = gaps_at(a1, a2, a3, f * theta_t, f * theta_b, cut);
      scale.push_back(f);
      rcg.push_back(g.rc);
      areag.push_back(g.area);
    }
    rep.rc_scaling_exponent = loglog_slope(scale, rcg);
    rep.area_scaling_exponent = loglog_slope(scale, areag);
  }
  return rep;
}

}  // namespace ratiocut
