// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ratiocut/domain.hpp"
#include "ratiocut/ratio_cut.hpp"

namespace ratiocut {

// Curvature parameters that make the parabolic caps match circular-arc caps
// through second order in the opening angles:
//   eps_t = -(1 + (a1-a2)^2)/2 * theta_t,   eps_b = (1 + a3^2)/2 * theta_b.
// Positive theta bulges outward on both curves (up on top, down on bottom).
struct CurvaturePair {
  double eps_t = 0;
  double eps_b = 0;
};
CurvaturePair curvature_from_arc(double a1, double a2, double a3,
                                 double theta_t, double theta_b);

// Trapezoid whose top/bottom boundary curves are circular arcs through the
// same corner points; the shape the cut iteration actually produces.
struct CircularTrapezoid {
  double a1 = 0, a2 = 0, a3 = 0;
  double theta_t = 0, theta_b = 0;

  BoundaryCurve top() const;     // traversed left to right
  BoundaryCurve bottom() const;  // traversed left to right
  double y_top(double x) const;
  double y_bottom(double x) const;
  double total_area() const;
  double left_area(const CutParams& cut) const;
  double ratio_cut_value(const CutParams& cut) const;
};

struct GapReport {
  double sup_gap_top = 0;      // sup_x |y_T^C - y_T^P|
  double sup_gap_bottom = 0;
  double total_area_gap = 0;
  double left_area_gap = 0;
  double rc_gap = 0;
  // empirical log-log slopes from evaluating the gaps at theta, theta/2,
  // theta/4 (0 when the gap vanishes identically)
  double rc_scaling_exponent = 0;
  double area_scaling_exponent = 0;
};

// Compares the circular-boundary trapezoid against its matched-curvature
// parabolic stand-in at the given cut.
GapReport parabolic_circular_gap(double a1, double a2, double a3,
                                 double theta_t, double theta_b,
                                 const CutParams& cut);

}  // namespace ratiocut
