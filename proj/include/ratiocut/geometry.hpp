// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ratiocut/errors.hpp"
#include "ratiocut/scalar.hpp"

namespace ratiocut {

struct Vec2 {
  double x = 0;
  double y = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Direct similarity p' = scale * R(angle) * p + shift (no reflections).
struct Similarity {
  double scale = 1;
  double c = 1;  // cos(angle)
  double s = 0;  // sin(angle)
  Vec2 shift{};

  Vec2 apply(Vec2 p) const {
    return {scale * (c * p.x - s * p.y) + shift.x,
            scale * (s * p.x + c * p.y) + shift.y};
  }
  Vec2 rotate(Vec2 p) const {   // linear part only, without the scale
    return {c * p.x - s * p.y, s * p.x + c * p.y};
  }
  double angle() const { return std::atan2(s, c); }
  Similarity inverse() const;
  // a.then(b): apply a first, then b.
  Similarity then(const Similarity& b) const;
  static Similarity rotation(double angle);
  static Similarity identity() { return {}; }
};

// ---------------------------------------------------------------------------
// Circular-arc scalar kernels. theta is the signed opening angle subtended at
// the circle center; theta = 0 is the straight chord. All are templated so
// the coefficient audit can run them in quad precision.

// Signed area between chord and arc, odd in theta. Closed form
// (chord^2/8) * (theta/sin^2(theta/2) - 2 cot(theta/2)), equal to
// (R^2/2)(theta - sin theta) for theta > 0; series below |theta| = 1e-4,
// where the closed form starts losing digits to cancellation.
template <class T>
T cap_area(T chord, T theta) {
  using namespace num;
  if (!(fabs(theta) <= pi_v<T>)) throw DomainError("cap_area: |theta| > pi");
  if (fabs(theta) < T(1e-4)) {
    return chord * chord * (theta / T(12) + theta * theta * theta / T(360));
  }
  const T s = sin(theta / T(2));
  const T cot = cos(theta / T(2)) / s;
  return chord * chord / T(8) * (theta / (s * s) - T(2) * cot);
}

// Arc length chord * (theta/2) / sin(theta/2); >= chord, equality iff theta=0.
template <class T>
T arc_length(T chord, T theta) {
  using namespace num;
  if (!(fabs(theta) <= pi_v<T>)) throw DomainError("arc_length: |theta| > pi");
  if (fabs(theta) < T(1e-4)) {
    const T t2 = theta * theta;
    return chord * (T(1) + t2 / T(24) + T(7) * t2 * t2 / T(5760));
  }
  return chord * (theta / T(2)) / sin(theta / T(2));
}

// Radius of the circle through the chord endpoints subtending |theta|.
// Empty result signals a straight cut (theta = 0): callers use the chord.
std::optional<double> arc_radius(double chord, double theta);

// Max deviation of the arc from its chord (the sagitta); 0 for theta = 0.
double arc_sagitta(double chord, double theta);

// ---------------------------------------------------------------------------

struct ArcGeometry {
  double radius = 0;
  Vec2 center{};
  double chord = 0;
  double opening_angle = 0;  // signed
  Vec2 p0{}, p1{};           // chord endpoints, in traversal order
  double phi0 = 0;           // angle of p0 seen from the center
};

// Circle through p0 and p1 subtending |theta|. Of the two candidate centers,
// the one making the arc bulge to the right of the directed chord p0->p1 is
// chosen for theta > 0 (for the near-vertical upward cut chord this puts the
// cap into the left region), to the left for theta < 0.
ArcGeometry circle_through(Vec2 p0, Vec2 p1, double theta);

// Point on the arc at fraction t in [0,1] from p0 to p1.
Vec2 arc_point(const ArcGeometry& g, double t);

enum class CurveKind { straight, parabolic, circular };
enum class SideProvenance { original, cut_arc };

// One boundary piece, stored parametrically so that restriction and rigid
// similarity transforms stay closed-form for all three kinds:
//   straight:  P(t) = c0 + c1 t
//   parabolic: P(t) = c0 + c1 t + c2 t^2
//   circular:  P(t) = center + radius (cos(phi0 + t sweep), sin(phi0 + t sweep))
// with t in [t0, t1].
struct BoundaryCurve {
  CurveKind kind = CurveKind::straight;
  Vec2 c0{}, c1{}, c2{};
  Vec2 center{};
  double radius = 0;
  double phi0 = 0;
  double sweep = 0;
  double t0 = 0, t1 = 1;
  SideProvenance provenance = SideProvenance::original;

  static BoundaryCurve segment(Vec2 a, Vec2 b);
  // Graph parabola y = A x^2 + B x + C over [x0, x1].
  static BoundaryCurve parabola(double A, double B, double C, double x0, double x1);
  static BoundaryCurve arc(const ArcGeometry& g);

  Vec2 point(double t) const;
  Vec2 start() const { return point(t0); }
  Vec2 end() const { return point(t1); }
  Vec2 tangent(double t) const;  // d/dt, unnormalized
  double stokes() const;         // (1/2) \int x dy - y dx along the piece
  double length_estimate() const;
  BoundaryCurve restricted(double ta, double tb) const;
  BoundaryCurve reversed() const;
  BoundaryCurve transformed(const Similarity& m) const;

  // Signed opening angle of the traversed portion (0 for non-circular).
  double opening() const {
    return kind == CurveKind::circular ? sweep * (t1 - t0) : 0.0;
  }
};

// Single-valued graph evaluation y = f(x); throws GeometryError when the
// curve is not a graph at x or x lies outside the traversed span.
double curve_eval(const BoundaryCurve& curve, double x);

// Parameter t with point(t).x == x (same preconditions as curve_eval).
double curve_param_at_x(const BoundaryCurve& curve, double x);

// Area enclosed by a closed counter-clockwise loop of curves. Endpoint
// chaining is verified to 1e-9; clockwise loops are rejected.
double stokes_area(std::span<const BoundaryCurve> loop);
double stokes_area(const std::vector<BoundaryCurve>& loop);

}  // namespace ratiocut
