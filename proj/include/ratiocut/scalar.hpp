// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#ifdef __SIZEOF_FLOAT128__
#include <quadmath.h>
#endif

namespace ratiocut::num {

// Math overload set so the ratio-cut kernel can be instantiated at double,
// long double, and __float128. Quad precision is what makes the fourth-order
// finite-difference coefficient audit possible at absolute 1e-4 tolerances.
using std::sqrt;
using std::sin;
using std::cos;
using std::tan;
using std::atan2;
using std::fabs;
using std::hypot;

#ifdef __SIZEOF_FLOAT128__
inline __float128 sqrt(__float128 x) { return sqrtq(x); }
inline __float128 sin(__float128 x) { return sinq(x); }
inline __float128 cos(__float128 x) { return cosq(x); }
inline __float128 tan(__float128 x) { return tanq(x); }
inline __float128 atan2(__float128 y, __float128 x) { return atan2q(y, x); }
inline __float128 fabs(__float128 x) { return fabsq(x); }
inline __float128 hypot(__float128 x, __float128 y) { return hypotq(x, y); }
#endif

template <class T>
inline constexpr T pi_v = T(3.14159265358979323846264338327950288L);

}  // namespace ratiocut::num
