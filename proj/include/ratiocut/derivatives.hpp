// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>

#include "ratiocut/ratio_cut.hpp"

namespace ratiocut {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// Central finite differences in (q, p, theta) with step h and one Richardson
// level; evaluation runs in long double so the 1e-10 gradient tolerance in
// the optimizer is actually reachable.
Vec3 rc_gradient(const DomainParams& s, const CutParams& cut, double h = 1e-5);
Mat3 rc_hessian(const DomainParams& s, const CutParams& cut, double h = 1e-5);

double norm2(const Vec3& v);
Vec3 solve3(const Mat3& a, const Vec3& b);  // NumericsError when singular
bool is_positive_definite(const Mat3& a);

// ---------------------------------------------------------------------------
// Quad-precision mixed partials of RC for the coefficient audit.
//
// A direction is one of q, p, theta or a sigma component; `orders` gives the
// derivative order (1 or 2) per direction. Central tensor stencils with one
// Richardson extrapolation level; at __float128 the round-off floor sits far
// below the audit tolerances even for fourth-order partials.
struct PartialSpec {
  // indices: 0..6 sigma components (a1,a2,a3,eps_t,eps_b,A_WL,A_WR),
  //          7 = q, 8 = p, 9 = theta
  std::array<int, 4> dir{};
  std::array<int, 4> order{};
  int ndirs = 0;
};

double mixed_partial_rc(const DomainParams& base, const CutParams& at,
                        const PartialSpec& spec, double h = 1e-4);

}  // namespace ratiocut
