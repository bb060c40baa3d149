// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ratiocut {

double DomainParams::max_abs() const {
  double m = 0;
  for (double v : as_array()) m = std::max(m, std::fabs(v));
  return m;
}

void DomainParams::require_gate(double gate) const {
  if (!in_gate(gate))
    throw GateError("domain parameters out of regime (|sigma|_inf = " +
                    std::to_string(max_abs()) + " > gate " + std::to_string(gate) + ")");
}

BoundaryCurve top_curve(const DomainParams& s) {
  return BoundaryCurve::parabola(s.eps_t, s.a2 - s.a1 - s.eps_t, s.a1 + 0.5, 0, 1);
}

BoundaryCurve bottom_curve(const DomainParams& s) {
  return BoundaryCurve::parabola(s.eps_b, s.a3 - s.eps_b, 0.0, 0, 1);
}

double total_area(const DomainParams& s, double gate) {
  s.require_gate(gate);
  return base_area<double>(s) + s.A_WL + s.A_WR;
}

DomainParams mirror(const DomainParams& s) {
  DomainParams m;
  m.a1 = s.a2 - s.a3;
  m.a2 = s.a1 - s.a3;
  m.a3 = -s.a3;
  m.eps_t = s.eps_t;
  m.eps_b = s.eps_b;
  m.A_WL = s.A_WR;
  m.A_WR = s.A_WL;
  return m;
}

std::string to_string(const DomainParams& s) {
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "{a1=%g a2=%g a3=%g eps_t=%g eps_b=%g A_WL=%g A_WR=%g}", s.a1,
                s.a2, s.a3, s.eps_t, s.eps_b, s.A_WL, s.A_WR);
  return buf;
}

}  // namespace ratiocut
