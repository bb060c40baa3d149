// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "ratiocut/domain.hpp"
#include "ratiocut/geometry.hpp"

namespace ratiocut {

// A cut: circular arc from (q, y_bottom(q)) to (p, y_top(p)) with signed
// opening angle theta. theta > 0 adds the cap area to the left region.
struct CutParams {
  double q = 0.5;
  double p = 0.5;
  double theta = 0;
};

enum class Normalization {
  plain,          // RC = |Gamma| / (A_left * A_right)
  area_weighted,  // RC multiplied by the total domain area
};

struct RatioCutBreakdown {
  double cut_length = 0;  // arc length of Gamma
  double chord = 0;
  double area_left = 0;   // includes A_WL
  double area_right = 0;  // includes A_WR
  double value = 0;
  std::optional<ArcGeometry> arc;  // empty marker for (numerically) straight cuts
  Normalization normalization = Normalization::plain;
};

struct EvalOptions {
  double gate = DomainParams::kDefaultGate;
  Normalization normalization = Normalization::plain;
  bool check_arc_inside = true;
  int arc_samples = 32;
};

// ---------------------------------------------------------------------------
// Raw kernel: the closed-form RC value with no validity checking, templated
// so derivatives can be taken in long double / __float128. The left base
// area comes from the Stokes loop (left side, bottom on [0,q], chord, top on
// [p,0]) whose curved pieces have exact antiderivatives, plus the signed cap.
template <class T>
struct RcParts {
  T chord, arc_len, area_left, area_right, total;
};

template <class T>
RcParts<T> rc_parts_raw(const DomainParams& s, T q, T p, T theta) {
  using namespace num;
  const T ytp = y_top<T>(s, p);
  const T ybq = y_bottom<T>(s, q);
  const T chord = hypot(p - q, ytp - ybq);
  // bottom piece + chord piece + top piece (+ left side contributes 0)
  const T stokes_base = T(s.eps_b) * q * q * q / T(6) +
                        T(0.5) * (q * ytp - p * ybq) -
                        T(s.eps_t) * p * p * p / T(6) +
                        (T(s.a1) / T(2) + T(0.25)) * p;
  const T left = stokes_base + cap_area<T>(chord, theta) + T(s.A_WL);
  const T right = base_area<T>(s) - stokes_base - cap_area<T>(chord, theta) + T(s.A_WR);
  RcParts<T> parts;
  parts.chord = chord;
  parts.arc_len = arc_length<T>(chord, theta);
  parts.area_left = left;
  parts.area_right = right;
  parts.total = base_area<T>(s) + T(s.A_WL) + T(s.A_WR);
  return parts;
}

template <class T>
T rc_value_raw(const DomainParams& s, T q, T p, T theta,
               Normalization norm = Normalization::plain) {
  const RcParts<T> parts = rc_parts_raw<T>(s, q, p, theta);
  T v = parts.arc_len / (parts.area_left * parts.area_right);
  if (norm == Normalization::area_weighted) v = v * parts.total;
  return v;
}

// ---------------------------------------------------------------------------
// Checked operations.

// Euclidean distance between the cut's endpoints on the boundary curves.
double chord_length(const DomainParams& s, const CutParams& cut);

// Area of the region left of the cut (wing included).
double left_area(const DomainParams& s, const CutParams& cut,
                 const EvalOptions& opts = {});

RatioCutBreakdown ratio_cut(const DomainParams& s, const CutParams& cut,
                            const EvalOptions& opts = {});

// ---------------------------------------------------------------------------
// Exact rectangle results (area-weighted convention). For an a x b rectangle
// with a > b the optimal cut is the midline {a/2} x [0,b] with value 4/a;
// a == b is orientation-degenerate (both midlines optimal).
struct RectangleCut {
  double value = 0;
  bool vertical = true;    // cut orthogonal to the longer side
  double position = 0;     // abscissa (or ordinate) of the cut line
  bool degenerate = false; // square: both orientations optimal
};
RectangleCut rectangle_ratio_cut(double a, double b);

// Area bound for a region between a chord and a slightly longer boundary:
// (1+eps0)/sqrt(6) * chord^{3/2} * sqrt(perimeter_excess), valid in the
// small-excess regime perimeter_excess <= 2*eps1*chord.
double excess_area_bound(double chord, double perimeter_excess, double eps0,
                         double eps1 = 0.05);

}  // namespace ratiocut
