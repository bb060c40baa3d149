// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/derivatives.hpp"

#include <cmath>

namespace ratiocut {

namespace {

using LD = long double;

LD rc_ld(const DomainParams& s, LD q, LD p, LD t) {
  return rc_value_raw<LD>(s, q, p, t);
}

Vec3 gradient_once(const DomainParams& s, const CutParams& c, LD h) {
  const LD q = c.q, p = c.p, t = c.theta;
  return {
      double((rc_ld(s, q + h, p, t) - rc_ld(s, q - h, p, t)) / (2 * h)),
      double((rc_ld(s, q, p + h, t) - rc_ld(s, q, p - h, t)) / (2 * h)),
      double((rc_ld(s, q, p, t + h) - rc_ld(s, q, p, t - h)) / (2 * h)),
  };
}

Mat3 hessian_once(const DomainParams& s, const CutParams& c, LD h) {
  const LD x0[3] = {c.q, c.p, c.theta};
  auto f = [&](LD a, LD b, LD cc) { return rc_ld(s, a, b, cc); };
  auto at = [&](int i, LD di, int j, LD dj) {
    LD x[3] = {x0[0], x0[1], x0[2]};
    x[i] += di;
    x[j] += dj;
    return f(x[0], x[1], x[2]);
  };
  Mat3 m{};
  const LD f0 = f(x0[0], x0[1], x0[2]);
  for (int i = 0; i < 3; ++i) {
    m[i][i] = double((at(i, h, i, 0) - 2 * f0 + at(i, -h, i, 0)) / (h * h));
    for (int j = i + 1; j < 3; ++j) {
      const LD v = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) +
                    at(i, -h, j, -h)) /
                   (4 * h * h);
      m[i][j] = m[j][i] = double(v);
    }
  }
  return m;
}

}  // namespace

Vec3 rc_gradient(const DomainParams& s, const CutParams& cut, double h) {
  const Vec3 g1 = gradient_once(s, cut, LD(h));
  const Vec3 g2 = gradient_once(s, cut, LD(h) / 2);
  Vec3 g;
  for (int i = 0; i < 3; ++i) g[i] = (4 * g2[i] - g1[i]) / 3;
  for (double v : g)
    if (!std::isfinite(v)) throw NumericsError("rc_gradient: non-finite value");
  return g;
}

Mat3 rc_hessian(const DomainParams& s, const CutParams& cut, double h) {
  const Mat3 m1 = hessian_once(s, cut, LD(h));
  const Mat3 m2 = hessian_once(s, cut, LD(h) / 2);
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      m[i][j] = (4 * m2[i][j] - m1[i][j]) / 3;
      if (!std::isfinite(m[i][j]))
        throw NumericsError("rc_hessian: non-finite value");
    }
  return m;
}

double norm2(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Vec3 solve3(const Mat3& a, const Vec3& b) {
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = a[i][j];
    m[i][3] = b[i];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    if (std::fabs(m[piv][col]) < 1e-300)
      throw NumericsError("solve3: singular system");
    if (piv != col)
      for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

bool is_positive_definite(const Mat3& a) {
  const double d1 = a[0][0];
  const double d2 = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const double d3 = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                    a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                    a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return d1 > 0 && d2 > 0 && d3 > 0;
}

// ---------------------------------------------------------------------------

namespace {

#ifdef __SIZEOF_FLOAT128__
using Q = __float128;
#else
using Q = long double;
#endif

Q rc_shifted(const DomainParams& base, const CutParams& at, const double sh[10]) {
  DomainParams s = base;
  s.a1 += sh[0];
  s.a2 += sh[1];
  s.a3 += sh[2];
  s.eps_t += sh[3];
  s.eps_b += sh[4];
  s.A_WL += sh[5];
  s.A_WR += sh[6];
  return rc_value_raw<Q>(s, Q(at.q) + Q(sh[7]), Q(at.p) + Q(sh[8]),
                         Q(at.theta) + Q(sh[9]));
}

// Tensor-product central stencil at step h (per direction; 2nd-order accurate).
Q stencil_eval(const DomainParams& base, const CutParams& at,
               const PartialSpec& spec, double h) {
  struct Node {
    double off;
    double w;
  };
  // order-1: (f(+h) - f(-h)) / 2h ; order-2: (f(+h) - 2 f + f(-h)) / h^2
  Node nodes[4][3];
  int counts[4];
  for (int d = 0; d < spec.ndirs; ++d) {
    if (spec.order[d] == 1) {
      nodes[d][0] = {+h, +1.0 / (2 * h)};
      nodes[d][1] = {-h, -1.0 / (2 * h)};
      counts[d] = 2;
    } else if (spec.order[d] == 2) {
      nodes[d][0] = {+h, 1.0 / (h * h)};
      nodes[d][1] = {0.0, -2.0 / (h * h)};
      nodes[d][2] = {-h, 1.0 / (h * h)};
      counts[d] = 3;
    } else {
      throw DomainError("mixed_partial_rc: per-direction order must be 1 or 2");
    }
  }
  Q acc = 0;
  int idx[4] = {0, 0, 0, 0};
  while (true) {
    double sh[10] = {0};
    Q w = 1;
    for (int d = 0; d < spec.ndirs; ++d) {
      sh[spec.dir[d]] += nodes[d][idx[d]].off;
      w *= Q(nodes[d][idx[d]].w);
    }
    acc += w * rc_shifted(base, at, sh);
    int d = 0;
    for (; d < spec.ndirs; ++d) {
      if (++idx[d] < counts[d]) break;
      idx[d] = 0;
    }
    if (d == spec.ndirs) break;
  }
  return acc;
}

}  // namespace

double mixed_partial_rc(const DomainParams& base, const CutParams& at,
                        const PartialSpec& spec, double h) {
  if (spec.ndirs < 1 || spec.ndirs > 4)
    throw DomainError("mixed_partial_rc: 1..4 directions");
  // power-of-two step keeps the shifted parameters exactly representable
  const double h0 = std::ldexp(1.0, std::ilogb(h));
  const Q d1 = stencil_eval(base, at, spec, h0);
  const Q d2 = stencil_eval(base, at, spec, h0 / 2);
  return double((Q(4) * d2 - d1) / Q(3));
}

}  // namespace ratiocut
