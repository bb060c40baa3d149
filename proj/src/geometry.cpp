// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ratiocut {

Similarity Similarity::inverse() const {
  Similarity inv;
  inv.scale = 1.0 / scale;
  inv.c = c;
  inv.s = -s;
  Vec2 back = inv.rotate(shift);
  inv.shift = {-inv.scale * back.x, -inv.scale * back.y};
  return inv;
}

Similarity Similarity::then(const Similarity& b) const {
  Similarity r;
  r.scale = scale * b.scale;
  r.c = b.c * c - b.s * s;
  r.s = b.s * c + b.c * s;
  r.shift = b.apply(shift);
  return r;
}

Similarity Similarity::rotation(double angle) {
  Similarity r;
  r.c = std::cos(angle);
  r.s = std::sin(angle);
  return r;
}

std::optional<double> arc_radius(double chord, double theta) {
  if (!(chord > 0)) throw DomainError("arc_radius: chord must be positive");
  if (!(std::fabs(theta) <= num::pi_v<double>))
    throw DomainError("arc_radius: |theta| > pi");
  if (theta == 0) return std::nullopt;  // straight cut
  return chord / (2.0 * std::sin(std::fabs(theta) / 2.0));
}

double arc_sagitta(double chord, double theta) {
  if (theta == 0) return 0;
  const double half = std::fabs(theta) / 2.0;
  const double r = chord / (2.0 * std::sin(half));
  return r * (1.0 - std::cos(half));
}

ArcGeometry circle_through(Vec2 p0, Vec2 p1, double theta) {
  const double chord = norm(p1 - p0);
  if (!(chord > 0)) throw GeometryError("circle_through: degenerate chord");
  if (!(std::fabs(theta) <= num::pi_v<double>) || theta == 0)
    throw DomainError("circle_through: need 0 < |theta| <= pi");

  const double half = std::fabs(theta) / 2.0;
  const double r = chord / (2.0 * std::sin(half));
  const Vec2 u = (1.0 / chord) * (p1 - p0);
  // Bulge side: right of travel for theta > 0, left for theta < 0.
  const Vec2 bulge = theta > 0 ? Vec2{u.y, -u.x} : Vec2{-u.y, u.x};
  const Vec2 mid = 0.5 * (p0 + p1);
  const double apothem = r * std::cos(half);
  const Vec2 center = mid - apothem * bulge;

  ArcGeometry g;
  g.radius = r;
  g.center = center;
  g.chord = chord;
  g.opening_angle = theta;
  g.p0 = p0;
  g.p1 = p1;
  g.phi0 = std::atan2(p0.y - center.y, p0.x - center.x);
  return g;
}

Vec2 arc_point(const ArcGeometry& g, double t) {
  const double phi = g.phi0 + t * g.opening_angle;
  return {g.center.x + g.radius * std::cos(phi),
          g.center.y + g.radius * std::sin(phi)};
}

BoundaryCurve BoundaryCurve::segment(Vec2 a, Vec2 b) {
  BoundaryCurve c;
  c.kind = CurveKind::straight;
  c.c0 = a;
  c.c1 = b - a;
  return c;
}

BoundaryCurve BoundaryCurve::parabola(double A, double B, double C, double x0,
                                      double x1) {
  BoundaryCurve c;
  c.kind = CurveKind::parabolic;
  c.c0 = {0, C};
  c.c1 = {1, B};
  c.c2 = {0, A};
  c.t0 = x0;
  c.t1 = x1;
  return c;
}

BoundaryCurve BoundaryCurve::arc(const ArcGeometry& g) {
  BoundaryCurve c;
  c.kind = CurveKind::circular;
  c.center = g.center;
  c.radius = g.radius;
  c.phi0 = g.phi0;
  c.sweep = g.opening_angle;
  return c;
}

Vec2 BoundaryCurve::point(double t) const {
  switch (kind) {
    case CurveKind::straight:
      return c0 + t * c1;
    case CurveKind::parabolic:
      return c0 + t * c1 + (t * t) * c2;
    case CurveKind::circular: {
      const double phi = phi0 + t * sweep;
      return {center.x + radius * std::cos(phi),
              center.y + radius * std::sin(phi)};
    }
  }
  return {};
}

Vec2 BoundaryCurve::tangent(double t) const {
  switch (kind) {
    case CurveKind::straight:
      return c1;
    case CurveKind::parabolic:
      return c1 + (2 * t) * c2;
    case CurveKind::circular: {
      const double phi = phi0 + t * sweep;
      return {-radius * sweep * std::sin(phi), radius * sweep * std::cos(phi)};
    }
  }
  return {};
}

double BoundaryCurve::stokes() const {
  switch (kind) {
    case CurveKind::straight: {
      // integrand x y' - y x' is the constant cross(c0, c1)
      return 0.5 * cross(c0, c1) * (t1 - t0);
    }
    case CurveKind::parabolic: {
      const double d01 = cross(c0, c1);
      const double d02 = cross(c0, c2);
      const double d12 = cross(c1, c2);
      const double D1 = t1 - t0;
      const double D2 = t1 * t1 - t0 * t0;
      const double D3 = t1 * t1 * t1 - t0 * t0 * t0;
      return 0.5 * (d01 * D1 + d02 * D2 + d12 * D3 / 3.0);
    }
    case CurveKind::circular: {
      const double a = phi0 + t0 * sweep;
      const double b = phi0 + t1 * sweep;
      const double ds = b - a;
      return 0.5 * (radius * radius * ds +
                    radius * (center.x * (std::sin(b) - std::sin(a)) -
                              center.y * (std::cos(b) - std::cos(a))));
    }
  }
  return 0;
}

double BoundaryCurve::length_estimate() const {
  switch (kind) {
    case CurveKind::straight:
      return norm(c1) * (t1 - t0);
    case CurveKind::circular:
      return radius * std::fabs(sweep) * (t1 - t0);
    case CurveKind::parabolic: {
      double len = 0;
      Vec2 prev = point(t0);
      constexpr int kSegs = 64;
      for (int i = 1; i <= kSegs; ++i) {
        Vec2 cur = point(t0 + (t1 - t0) * i / kSegs);
        len += norm(cur - prev);
        prev = cur;
      }
      return len;
    }
  }
  return 0;
}

BoundaryCurve BoundaryCurve::restricted(double ta, double tb) const {
  BoundaryCurve c = *this;
  c.t0 = ta;
  c.t1 = tb;
  return c;
}

BoundaryCurve BoundaryCurve::reversed() const {
  BoundaryCurve c = *this;
  switch (kind) {
    case CurveKind::straight:
    case CurveKind::parabolic: {
      // reparametrize with s = t0 + t1 - t
      const double a = t0 + t1;
      c.c0 = c0 + a * c1 + (a * a) * c2;
      c.c1 = -1.0 * c1 - (2 * a) * c2;
      c.c2 = c2;
      break;
    }
    case CurveKind::circular: {
      c.phi0 = phi0 + (t0 + t1) * sweep;
      c.sweep = -sweep;
      break;
    }
  }
  return c;
}

BoundaryCurve BoundaryCurve::transformed(const Similarity& m) const {
  BoundaryCurve c = *this;
  switch (kind) {
    case CurveKind::straight:
    case CurveKind::parabolic: {
      c.c0 = m.apply(c0);
      Vec2 l1 = m.rotate(c1), l2 = m.rotate(c2);
      c.c1 = m.scale * l1;
      c.c2 = m.scale * l2;
      break;
    }
    case CurveKind::circular: {
      c.center = m.apply(center);
      c.radius = m.scale * radius;
      c.phi0 = phi0 + m.angle();
      break;
    }
  }
  return c;
}

double curve_param_at_x(const BoundaryCurve& curve, double x) {
  const double lo = std::min(curve.t0, curve.t1);
  const double hi = std::max(curve.t0, curve.t1);
  const double span = std::max(1.0, hi - lo);
  const double tol = 1e-9 * span;

  auto in_range = [&](double t) { return t >= lo - tol && t <= hi + tol; };

  switch (curve.kind) {
    case CurveKind::straight: {
      if (std::fabs(curve.c1.x) < 1e-300)
        throw GeometryError("curve_eval: vertical segment is not a graph over x");
      const double t = (x - curve.c0.x) / curve.c1.x;
      if (!in_range(t)) throw GeometryError("curve_eval: x outside curve span");
      return t;
    }
    case CurveKind::parabolic: {
      const double a = curve.c2.x, b = curve.c1.x, c = curve.c0.x - x;
      if (std::fabs(a) < 1e-14 * std::max(1.0, std::fabs(b))) {
        if (std::fabs(b) < 1e-300)
          throw GeometryError("curve_eval: degenerate parabola parametrization");
        const double t = -c / b;
        if (!in_range(t)) throw GeometryError("curve_eval: x outside curve span");
        return t;
      }
      const double disc = b * b - 4 * a * c;
      if (disc < 0) throw GeometryError("curve_eval: x outside curve span");
      const double sq = std::sqrt(disc);
      const double r1 = (-b + sq) / (2 * a);
      const double r2 = (-b - sq) / (2 * a);
      const bool ok1 = in_range(r1), ok2 = in_range(r2);
      if (ok1 && ok2 && std::fabs(r1 - r2) > 1e-7 * span)
        throw GeometryError("curve_eval: curve is not single-valued at x");
      if (ok1) return r1;
      if (ok2) return r2;
      throw GeometryError("curve_eval: x outside curve span");
    }
    case CurveKind::circular: {
      const double dx = x - curve.center.x;
      const double disc = curve.radius * curve.radius - dx * dx;
      if (disc < 0) throw GeometryError("curve_eval: negative circle discriminant");
      const double dy = std::sqrt(disc);
      double found = 0;
      int hits = 0;
      for (double cand_y : {dy, -dy}) {
        const double phi = std::atan2(cand_y, dx);
        // map phi into the traversed angular window
        const double base = curve.phi0 + curve.t0 * curve.sweep;
        const double span_phi = (curve.t1 - curve.t0) * curve.sweep;
        if (std::fabs(span_phi) < 1e-300) continue;
        double rel = std::remainder(phi - base, 2 * num::pi_v<double>);
        double tloc = rel / span_phi;
        const double atol = 1e-9 / std::max(std::fabs(span_phi), 1e-6);
        if (tloc >= -atol && tloc <= 1 + atol) {
          const double t = curve.t0 + tloc * (curve.t1 - curve.t0);
          if (hits == 0 || std::fabs(t - found) > 1e-7) {
            found = t;
            ++hits;
          }
        }
      }
      if (hits == 0) throw GeometryError("curve_eval: x outside arc span");
      if (hits > 1) throw GeometryError("curve_eval: arc is not single-valued at x");
      return found;
    }
  }
  throw GeometryError("curve_eval: unknown curve kind");
}

double curve_eval(const BoundaryCurve& curve, double x) {
  return curve.point(curve_param_at_x(curve, x)).y;
}

double stokes_area(std::span<const BoundaryCurve> loop) {
  if (loop.empty()) throw GeometryError("stokes_area: empty loop");
  double area = 0;
  double scale = 0;
  for (const auto& c : loop) scale = std::max({scale, norm(c.start()), norm(c.end())});
  const double tol = 1e-9 * std::max(1.0, scale);
  for (size_t i = 0; i < loop.size(); ++i) {
    const Vec2 e = loop[i].end();
    const Vec2 s = loop[(i + 1) % loop.size()].start();
    if (norm(e - s) > tol)
      throw GeometryError("stokes_area: loop is not closed");
    area += loop[i].stokes();
  }
  if (!(area > 0))
    throw GeometryError("stokes_area: loop is clockwise or degenerate");
  return area;
}

double stokes_area(const std::vector<BoundaryCurve>& loop) {
  return stokes_area(std::span<const BoundaryCurve>(loop));
}

}  // namespace ratiocut
