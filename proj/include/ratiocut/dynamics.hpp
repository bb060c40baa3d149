// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "ratiocut/arc_approx.hpp"
#include "ratiocut/optimize.hpp"

namespace ratiocut {

// Curvilinear quadrilateral, stored as four boundary pieces in CCW traversal
// order: bottom (bl->br), right (br->tr), top (tr->tl), left (tl->bl).
struct CurvilinearQuad {
  enum Side { kBottom = 0, kRight = 1, kTop = 2, kLeft = 3 };
  std::array<BoundaryCurve, 4> sides;

  Vec2 corner(int i) const { return sides[i].start(); }  // bl, br, tr, tl
  std::vector<BoundaryCurve> loop() const {
    return {sides[0], sides[1], sides[2], sides[3]};
  }
  double area() const { return stokes_area(loop()); }
  std::array<double, 4> corner_angles() const;  // interior, radians
  double width() const;                         // mean of bottom/top chords
  double height() const;                        // mean of left/right chords

  CurvilinearQuad transformed(const Similarity& m) const;

  static CurvilinearQuad rectangle(double w, double h);
  // Parabolic trapezoid realization; wings have no boundary realization, so
  // sigma.A_WL and sigma.A_WR must be zero.
  static CurvilinearQuad from_sigma(const DomainParams& s);
  // Isosceles right triangle, encoded with an extra corner at the hypotenuse
  // midpoint; the straight angle there keeps the four-sided representation.
  static CurvilinearQuad isosceles_right_triangle();
};

// Rectangularity functional: corner-angle deviations from pi/2 plus the
// largest sup over the sides of |g'| + |g''| + |g'''|, each side read as a
// graph over its chord (sampled at 101 interior points plus endpoints).
double iq_metric(const CurvilinearQuad& q);

struct FitResult {
  DomainParams sigma;
  double residual = 0;      // sup curve gap in the central window + area slack
  double area_absorbed = 0; // area mismatch folded into the wings
};

// Reads corner offsets from the corners, curvatures from circular sides (cap
// matching) or a pinned-endpoint least-squares parabola, wings as residual
// side/chord areas. Expects a normalized quad; gates on I(Q).
FitResult fit_sigma(const CurvilinearQuad& q,
                    double iq_gate = DomainParams::kDefaultGate);

struct NormalizeResult {
  CurvilinearQuad quad;
  Similarity transform;  // maps input coordinates to normalized coordinates
  bool rotated_quarter_turn = false;
};

// Long direction horizontal on [0,1], bottom-left corner at the origin,
// bottom chord level. Idempotent.
NormalizeResult normalize(const CurvilinearQuad& q);

struct CutOptions {
  double iq_gate = DomainParams::kDefaultGate;
  // sigma gate for the internal evaluations; wide because exact rectangles
  // of aspect near 1 normalize to a1 = a2 near 1/2
  double sigma_gate = 0.75;
  double orientation_tie_rel = 1e-9;
};

struct CutDomainResult {
  CurvilinearQuad left;
  CurvilinearQuad right;
  OptimizeReport report;        // in the normalized frame of the parent
  DomainParams fitted_sigma;
  NormalizeResult normalization;
  bool orientation_degenerate = false;  // both orientations tie (square-like)
  double rotated_value = 0;             // competing orientation's value, parent scale
};

CutDomainResult cut_domain(const CurvilinearQuad& q, const CutOptions& opts = {});

enum class SidePolicy { left, right, alternate, away_from_original };
const char* to_string(SidePolicy p);

struct TrajectoryStep {
  int step = 0;
  DomainParams sigma;
  CutParams cut;
  double rc_value = 0;  // normalized frame
  double iq = 0;
  double aspect = 0;    // width / height before rescaling
  double bulge = 0;     // cut-arc sagitta, normalized frame
  std::string side;     // which child was kept
  Similarity transform; // normalization applied at this step
  bool orientation_degenerate = false;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  std::string stop_reason;  // empty when all requested steps ran
};

Trajectory iterate(const CurvilinearQuad& q0, int steps, SidePolicy policy,
                   const CutOptions& opts = {});

// JSON-lines serialization, one record per step.
std::string trajectory_jsonl(const Trajectory& t);

}  // namespace ratiocut
