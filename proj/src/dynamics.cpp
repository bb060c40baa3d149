// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace ratiocut {

namespace {

double interior_angle(Vec2 t_in, Vec2 t_out) {
  const double turn = std::atan2(cross(t_in, t_out), dot(t_in, t_out));
  return num::pi_v<double> - turn;
}

}  // namespace

std::array<double, 4> CurvilinearQuad::corner_angles() const {
  std::array<double, 4> a{};
  for (int i = 0; i < 4; ++i) {
    const BoundaryCurve& in = sides[(i + 3) % 4];
    const BoundaryCurve& out = sides[i];
    a[i] = interior_angle(in.tangent(in.t1), out.tangent(out.t0));
  }
  return a;
}

double CurvilinearQuad::width() const {
  return 0.5 * (norm(corner(1) - corner(0)) + norm(corner(2) - corner(3)));
}

double CurvilinearQuad::height() const {
  return 0.5 * (norm(corner(3) - corner(0)) + norm(corner(2) - corner(1)));
}

CurvilinearQuad CurvilinearQuad::transformed(const Similarity& m) const {
  CurvilinearQuad q;
  for (int i = 0; i < 4; ++i) q.sides[i] = sides[i].transformed(m);
  return q;
}

CurvilinearQuad CurvilinearQuad::rectangle(double w, double h) {
  if (!(w > 0) || !(h > 0)) throw DomainError("rectangle sides must be positive");
  CurvilinearQuad q;
  q.sides[kBottom] = BoundaryCurve::segment({0, 0}, {w, 0});
  q.sides[kRight] = BoundaryCurve::segment({w, 0}, {w, h});
  q.sides[kTop] = BoundaryCurve::segment({w, h}, {0, h});
  q.sides[kLeft] = BoundaryCurve::segment({0, h}, {0, 0});
  return q;
}

CurvilinearQuad CurvilinearQuad::from_sigma(const DomainParams& s) {
  if (s.A_WL != 0 || s.A_WR != 0)
    throw DomainError("from_sigma: wing areas have no boundary realization");
  CurvilinearQuad q;
  q.sides[kBottom] = bottom_curve(s);
  q.sides[kRight] = BoundaryCurve::segment({1, s.a3}, {1, 0.5 + s.a2});
  q.sides[kTop] = top_curve(s).reversed();
  q.sides[kLeft] = BoundaryCurve::segment({0, 0.5 + s.a1}, {0, 0});
  return q;
}

CurvilinearQuad CurvilinearQuad::isosceles_right_triangle() {
  CurvilinearQuad q;
  q.sides[kBottom] = BoundaryCurve::segment({0, 0}, {1, 0});
  q.sides[kRight] = BoundaryCurve::segment({1, 0}, {0.5, 0.5});
  q.sides[kTop] = BoundaryCurve::segment({0.5, 0.5}, {0, 1});
  q.sides[kLeft] = BoundaryCurve::segment({0, 1}, {0, 0});
  return q;
}

// ---------------------------------------------------------------------------

namespace {

// sup over the side of |g'|+|g''|+|g'''| with the side read as a graph over
// its chord. Parametric derivatives are closed-form for all three kinds, so
// the sample is exact pointwise.
double side_derivative_sup(const BoundaryCurve& side) {
  const Vec2 a = side.start(), b = side.end();
  const Vec2 ch = b - a;
  const double len = norm(ch);
  if (!(len > 0)) throw GeometryError("iq_metric: degenerate side");
  const Similarity align = Similarity::rotation(-std::atan2(ch.y, ch.x));
  const BoundaryCurve c = side.transformed(align);

  auto derivs = [&](double t, double& d1, double& d2, double& d3) {
    Vec2 p1 = c.tangent(t);
    Vec2 p2{}, p3{};
    switch (c.kind) {
      case CurveKind::straight:
        break;
      case CurveKind::parabolic:
        p2 = 2.0 * c.c2;
        break;
      case CurveKind::circular: {
        const double phi = c.phi0 + t * c.sweep;
        const double s = c.sweep;
        p2 = {-c.radius * s * s * std::cos(phi), -c.radius * s * s * std::sin(phi)};
        p3 = {c.radius * s * s * s * std::sin(phi), -c.radius * s * s * s * std::cos(phi)};
        break;
      }
    }
    const double x1 = p1.x, y1 = p1.y, x2 = p2.x, y2 = p2.y, x3 = p3.x, y3 = p3.y;
    if (std::fabs(x1) < 1e-12 * std::max(1.0, std::fabs(y1)))
      throw GeometryError("iq_metric: side is not a graph over its chord");
    d1 = y1 / x1;
    d2 = (y2 * x1 - y1 * x2) / (x1 * x1 * x1);
    d3 = (y3 * x1 * x1 - y1 * x1 * x3 - 3 * x1 * x2 * y2 + 3 * y1 * x2 * x2) /
         (x1 * x1 * x1 * x1 * x1);
  };

  double sup = 0;
  constexpr int kInterior = 101;
  for (int i = 0; i <= kInterior + 1; ++i) {
    const double t = c.t0 + (c.t1 - c.t0) * i / double(kInterior + 1);
    double d1, d2, d3;
    derivs(t, d1, d2, d3);
    sup = std::max(sup, std::fabs(d1) + std::fabs(d2) + std::fabs(d3));
  }
  return sup;
}

}  // namespace

double iq_metric(const CurvilinearQuad& q) {
  double total = 0;
  for (double ang : q.corner_angles())
    total += std::fabs(ang - num::pi_v<double> / 2);
  double sup = 0;
  for (const BoundaryCurve& s : q.sides) sup = std::max(sup, side_derivative_sup(s));
  return total + sup;
}

// ---------------------------------------------------------------------------

namespace {

// Signed area between a side and its chord; positive when the side bulges
// outward (away from the quad interior) for the CCW traversal order.
double signed_cap(const BoundaryCurve& side) {
  if (side.kind == CurveKind::straight) return 0;
  return side.stokes() + BoundaryCurve::segment(side.end(), side.start()).stokes();
}

// Least-squares coefficient of x^2 - x against samples of (side - line),
// with the line through the side's endpoints; 33 samples.
double ls_curvature(const BoundaryCurve& side) {
  const Vec2 a = side.start(), b = side.end();
  if (std::fabs(b.x - a.x) < 1e-12)
    throw GeometryError("fit_sigma: top/bottom side has no horizontal extent");
  double num = 0, den = 0;
  constexpr int kSamples = 33;
  for (int i = 0; i < kSamples; ++i) {
    const double t = side.t0 + (side.t1 - side.t0) * (i + 0.5) / kSamples;
    const Vec2 pt = side.point(t);
    const double u = (pt.x - a.x) / (b.x - a.x);
    const double line = a.y + (b.y - a.y) * u;
    const double phi = u * u - u;
    num += (pt.y - line) * phi;
    den += phi * phi;
  }
  if (!(den > 0)) throw GeometryError("fit_sigma: degenerate side sampling");
  return num / den;
}

}  // namespace

FitResult fit_sigma(const CurvilinearQuad& q, double iq_gate) {
  const double iq = iq_metric(q);
  if (iq > iq_gate)
    throw GateError("fit_sigma: I(Q) = " + std::to_string(iq) +
                    " exceeds gate " + std::to_string(iq_gate));
  const Vec2 bl = q.corner(0), br = q.corner(1), tr = q.corner(2), tl = q.corner(3);
  if (norm(bl) > 1e-6 || std::fabs(br.y) > 0.2 || std::fabs(br.x - 1) > 1e-6)
    throw DomainError("fit_sigma: quad is not in the normalized frame");

  DomainParams s;
  s.a1 = tl.y - 0.5;
  s.a2 = tr.y - 0.5;
  s.a3 = br.y;

  const BoundaryCurve& top = q.sides[CurvilinearQuad::kTop];
  const BoundaryCurve& bottom = q.sides[CurvilinearQuad::kBottom];

  // Curvatures: cap-area matching for circular sides, least squares else.
  // Positive signed cap = outward bulge = positive opening for both curves.
  if (top.kind == CurveKind::circular) {
    const double theta_t = std::copysign(std::fabs(top.opening()),
                                         signed_cap(top));
    s.eps_t = curvature_from_arc(s.a1, s.a2, s.a3, theta_t, 0).eps_t;
  } else {
    s.eps_t = ls_curvature(top);
  }
  if (bottom.kind == CurveKind::circular) {
    const double theta_b = std::copysign(std::fabs(bottom.opening()),
                                         signed_cap(bottom));
    s.eps_b = curvature_from_arc(s.a1, s.a2, s.a3, 0, theta_b).eps_b;
  } else {
    s.eps_b = ls_curvature(bottom);
  }

  // Wings: side-vs-chord areas, then fold the total-area mismatch in evenly
  // so the rebuilt trapezoid conserves area exactly.
  s.A_WL = signed_cap(q.sides[CurvilinearQuad::kLeft]);
  s.A_WR = signed_cap(q.sides[CurvilinearQuad::kRight]);
  const double mismatch = q.area() - (base_area<double>(s) + s.A_WL + s.A_WR);
  s.A_WL += mismatch / 2;
  s.A_WR += mismatch / 2;

  FitResult r;
  r.sigma = s;
  r.area_absorbed = mismatch;
  double sup = std::fabs(mismatch);
  for (int i = 0; i <= 32; ++i) {
    const double x = 0.3 + 0.4 * i / 32.0;
    sup = std::max(sup, std::fabs(curve_eval(top, x) - y_top<double>(s, x)));
    sup = std::max(sup, std::fabs(curve_eval(bottom, x) - y_bottom<double>(s, x)));
  }
  r.residual = sup;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

CurvilinearQuad quarter_turn(const CurvilinearQuad& q) {
  // Rotate by -90 degrees; the old right side becomes the new bottom, and
  // the CCW cycle is preserved by shifting the side labels by one.
  const Similarity rot = Similarity::rotation(-num::pi_v<double> / 2);
  CurvilinearQuad r;
  for (int i = 0; i < 4; ++i)
    r.sides[i] = q.sides[(i + 1) % 4].transformed(rot);
  return r;
}

NormalizeResult normalize_impl(const CurvilinearQuad& q0, bool allow_flip) {
  NormalizeResult res;
  CurvilinearQuad q = q0;
  Similarity total = Similarity::identity();
  if (allow_flip && q.height() > q.width() * (1 + 1e-12)) {
    q = quarter_turn(q);
    total = total.then(Similarity::rotation(-num::pi_v<double> / 2));
    res.rotated_quarter_turn = true;
  }
  // level the bottom chord
  const Vec2 bl0 = q.corner(0), br0 = q.corner(1);
  const Similarity level =
      Similarity::rotation(-std::atan2(br0.y - bl0.y, br0.x - bl0.x));
  q = q.transformed(level);
  total = total.then(level);
  // bottom-left corner to the origin, width to 1
  const Vec2 bl = q.corner(0);
  Similarity shift;
  shift.shift = {-bl.x, -bl.y};
  q = q.transformed(shift);
  total = total.then(shift);
  const double w = q.corner(1).x;
  if (!(w > 0)) throw GeometryError("normalize: degenerate width");
  Similarity scale;
  scale.scale = 1.0 / w;
  q = q.transformed(scale);
  total = total.then(scale);

  res.quad = q;
  res.transform = total;
  return res;
}

}  // namespace

NormalizeResult normalize(const CurvilinearQuad& q0) {
  return normalize_impl(q0, /*allow_flip=*/true);
}

// ---------------------------------------------------------------------------

namespace {

struct OrientedCut {
  NormalizeResult norm;
  FitResult fit;
  OptimizeReport report;
  // RC re-expressed at the scale of the quad this orientation started from
  double input_scale_value = 0;
};

OrientedCut solve_orientation(const CurvilinearQuad& q, const CutOptions& opts,
                              bool allow_flip) {
  OrientedCut oc;
  oc.norm = normalize_impl(q, allow_flip);
  oc.fit = fit_sigma(oc.norm.quad, opts.iq_gate);
  OptimizeOptions oo;
  oo.gate = opts.sigma_gate;
  oc.report = optimize_cut(oc.fit.sigma, oo);
  const double k = oc.norm.transform.scale;  // input length * k = unit width
  oc.input_scale_value = oc.report.breakdown.value * k * k * k;
  return oc;
}

}  // namespace

CutDomainResult cut_domain(const CurvilinearQuad& q, const CutOptions& opts) {
  OrientedCut main = solve_orientation(q, opts, /*allow_flip=*/true);

  CutDomainResult out;
  // Near a square the optimal orientation is ambiguous; evaluate the quarter
  // turn of the normalized quad as well (without letting the normalization
  // flip it back) and keep the global minimum, flagging a tie.
  const double aspect = main.norm.quad.width() / main.norm.quad.height();
  if (std::fabs(aspect - 1.0) < 0.2) {
    try {
      OrientedCut rotated =
          solve_orientation(quarter_turn(main.norm.quad), opts, /*allow_flip=*/false);
      // both values are expressed in units of main.norm.quad here
      const double main_val = main.report.breakdown.value;
      out.rotated_value = rotated.input_scale_value;
      const double rel = std::fabs(rotated.input_scale_value - main_val) / main_val;
      if (rel <= opts.orientation_tie_rel) {
        out.orientation_degenerate = true;  // tie: keep the unrotated frame
      } else if (rotated.input_scale_value < main_val) {
        rotated.norm.transform = main.norm.transform
                                     .then(Similarity::rotation(-num::pi_v<double> / 2))
                                     .then(rotated.norm.transform);
        rotated.norm.rotated_quarter_turn = true;
        main = rotated;
      }
    } catch (const std::exception&) {
      // rotated orientation not fittable; keep the main one
    }
  }

  const CurvilinearQuad& nq = main.norm.quad;
  const CutParams cut = main.report.cut;
  const BoundaryCurve& bottom = nq.sides[CurvilinearQuad::kBottom];
  const BoundaryCurve& top = nq.sides[CurvilinearQuad::kTop];
  const double tq = curve_param_at_x(bottom, cut.q);
  const double tp = curve_param_at_x(top, cut.p);
  const Vec2 p0 = bottom.point(tq);
  const Vec2 p1 = top.point(tp);

  // Below |theta| ~ 1e-6 the supporting circle's radius makes the arc
  // parametrization lose more precision than the sagitta is worth; use the
  // chord (both children share whatever curve is chosen, so the area
  // decomposition stays exact either way).
  BoundaryCurve cut_up =
      std::fabs(cut.theta) < 1e-6
          ? BoundaryCurve::segment(p0, p1)
          : BoundaryCurve::arc(circle_through(p0, p1, cut.theta));
  cut_up.provenance = SideProvenance::cut_arc;

  CurvilinearQuad left, right;
  left.sides[CurvilinearQuad::kBottom] = bottom.restricted(bottom.t0, tq);
  left.sides[CurvilinearQuad::kRight] = cut_up;
  left.sides[CurvilinearQuad::kTop] = top.restricted(tp, top.t1);
  left.sides[CurvilinearQuad::kLeft] = nq.sides[CurvilinearQuad::kLeft];

  right.sides[CurvilinearQuad::kBottom] = bottom.restricted(tq, bottom.t1);
  right.sides[CurvilinearQuad::kRight] = nq.sides[CurvilinearQuad::kRight];
  right.sides[CurvilinearQuad::kTop] = top.restricted(top.t0, tp);
  right.sides[CurvilinearQuad::kLeft] = cut_up.reversed();

  out.left = left;
  out.right = right;
  out.report = main.report;
  out.fitted_sigma = main.fit.sigma;
  out.normalization = main.norm;
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(SidePolicy p) {
  switch (p) {
    case SidePolicy::left: return "left";
    case SidePolicy::right: return "right";
    case SidePolicy::alternate: return "alternate";
    case SidePolicy::away_from_original: return "away-from-original";
  }
  return "?";
}

namespace {

int original_side_count(const CurvilinearQuad& q) {
  int n = 0;
  for (const auto& s : q.sides)
    if (s.provenance == SideProvenance::original) ++n;
  return n;
}

}  // namespace

Trajectory iterate(const CurvilinearQuad& q0, int steps, SidePolicy policy,
                   const CutOptions& opts) {
  Trajectory traj;
  CurvilinearQuad cur = q0;
  for (int k = 0; k < steps; ++k) {
    CutDomainResult cd;
    try {
      cd = cut_domain(cur, opts);
    } catch (const std::exception& e) {
      traj.stop_reason = "step " + std::to_string(k) + ": " + e.what();
      break;
    }
    TrajectoryStep rec;
    rec.step = k;
    rec.sigma = cd.fitted_sigma;
    rec.cut = cd.report.cut;
    rec.rc_value = cd.report.breakdown.value;
    rec.iq = iq_metric(cd.normalization.quad);
    rec.aspect = cd.normalization.quad.width() / cd.normalization.quad.height();
    rec.bulge = arc_sagitta(cd.report.breakdown.chord, cd.report.cut.theta);
    rec.transform = cd.normalization.transform;
    rec.orientation_degenerate = cd.orientation_degenerate;

    bool take_left = false;
    switch (policy) {
      case SidePolicy::left: take_left = true; break;
      case SidePolicy::right: take_left = false; break;
      case SidePolicy::alternate: take_left = (k % 2 == 0); break;
      case SidePolicy::away_from_original: {
        const int nl = original_side_count(cd.left);
        const int nr = original_side_count(cd.right);
        if (nl != nr) {
          take_left = nl < nr;
        } else {
          // tie: keep the more rectangular child
          double il = 1e300, ir = 1e300;
          try { il = iq_metric(normalize(cd.left).quad); } catch (const std::exception&) {}
          try { ir = iq_metric(normalize(cd.right).quad); } catch (const std::exception&) {}
          take_left = il <= ir;
        }
        break;
      }
    }
    rec.side = take_left ? "left" : "right";
    traj.steps.push_back(rec);
    cur = take_left ? cd.left : cd.right;
  }
  return traj;
}

std::string trajectory_jsonl(const Trajectory& t) {
  std::ostringstream os;
  for (const TrajectoryStep& s : t.steps) {
    nlohmann::json j;
    j["step"] = s.step;
    j["sigma"] = s.sigma.as_array();
    j["cut"] = {{"q", s.cut.q}, {"p", s.cut.p}, {"theta", s.cut.theta}};
    j["rc_value"] = s.rc_value;
    j["iq"] = s.iq;
    j["aspect"] = s.aspect;
    j["bulge"] = s.bulge;
    j["side"] = s.side;
    j["transform"] = {{"scale", s.transform.scale},
                      {"rotation", s.transform.angle()},
                      {"tx", s.transform.shift.x},
                      {"ty", s.transform.shift.y}};
    if (s.orientation_degenerate) j["orientation_degenerate"] = true;
    os << j.dump() << "\n";
  }
  if (!t.stop_reason.empty()) {
    nlohmann::json j;
    j["stopped"] = t.stop_reason;
    os << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace ratiocut
