// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>

#include "ratiocut/errors.hpp"
#include "ratiocut/geometry.hpp"

namespace ratiocut {

// Parabolic trapezoid on the width-1 normalized domain. Base vertices are
// (0,0), (0, 1/2 + a1), (1, 1/2 + a2), (1, a3); the top and bottom boundary
// curves are
//   y_top(x)    = eps_t x^2 + (a2 - a1 - eps_t) x + a1 + 1/2
//   y_bottom(x) = eps_b x^2 + (a3 - eps_b) x
// and A_WL / A_WR are black-box wing areas attached to the left/right sides.
struct DomainParams {
  double a1 = 0;
  double a2 = 0;
  double a3 = 0;
  double eps_t = 0;
  double eps_b = 0;
  double A_WL = 0;
  double A_WR = 0;

  static constexpr double kDefaultGate = 0.25;

  std::array<double, 7> as_array() const {
    return {a1, a2, a3, eps_t, eps_b, A_WL, A_WR};
  }
  static DomainParams from_array(const std::array<double, 7>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
  }
  double max_abs() const;
  bool in_gate(double gate = kDefaultGate) const { return max_abs() <= gate; }
  void require_gate(double gate = kDefaultGate) const;
};

inline const char* kSigmaNames[7] = {"a1", "a2", "a3", "eps_t", "eps_b", "A_WL", "A_WR"};

// Boundary curve values, templated for high-precision differentiation.
template <class T>
T y_top(const DomainParams& s, T x) {
  return T(s.eps_t) * x * x + (T(s.a2) - T(s.a1) - T(s.eps_t)) * x + T(s.a1) + T(0.5);
}
template <class T>
T y_bottom(const DomainParams& s, T x) {
  return T(s.eps_b) * x * x + (T(s.a3) - T(s.eps_b)) * x;
}

BoundaryCurve top_curve(const DomainParams& s);
BoundaryCurve bottom_curve(const DomainParams& s);

// Area of the base trapezoid (wings excluded), by Stokes integration of the
// boundary: 1/2 + (a1+a2)/2 - a3/2 - eps_t/6 + eps_b/6.
template <class T>
T base_area(const DomainParams& s) {
  return T(0.5) + (T(s.a1) + T(s.a2)) / T(2) - T(s.a3) / T(2) -
         T(s.eps_t) / T(6) + T(s.eps_b) / T(6);
}

// Total area including both wings. Gate-checked.
double total_area(const DomainParams& s, double gate = DomainParams::kDefaultGate);

// The left-right reflection x -> 1-x followed by the vertical shift putting
// the bottom-left corner back at the origin. Exact within the family:
//   (a1,a2,a3,et,eb,WL,WR) -> (a2-a3, a1-a3, -a3, et, eb, WR, WL),
// with cuts mapping as (q,p,theta) -> (1-q, 1-p, -theta).
DomainParams mirror(const DomainParams& s);

std::string to_string(const DomainParams& s);

}  // namespace ratiocut
