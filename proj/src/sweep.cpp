// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>

#include "ratiocut/dynamics.hpp"
#include "ratiocut/io.hpp"

namespace fs = std::filesystem;

namespace ratiocut {

const std::vector<SweepFamily>& sweep_families() {
  static const std::vector<SweepFamily> families = {
      {"a1-up", "a1", 0.0, 0.1,
       [](double t) { DomainParams s; s.a1 = t; return s; }, 0.25},
      {"a1-down", "a1", -0.1, 0.0,
       [](double t) { DomainParams s; s.a1 = t; return s; }, 0.25},
      {"awl", "A_WL", 0.0, 0.1,
       [](double t) { DomainParams s; s.A_WL = t; return s; }, 0.25},
      {"eps-t", "eps_t", -0.5, 0.0,
       [](double t) { DomainParams s; s.eps_t = t; return s; }, 0.55},
      {"a1=a3", "a1", 0.0, 0.1,
       [](double t) { DomainParams s; s.a1 = t; s.a3 = t; return s; }, 0.25},
      {"a1=-a3", "a1", 0.0, 0.1,
       [](double t) { DomainParams s; s.a1 = t; s.a3 = -t; return s; }, 0.25},
      {"a1=-eps_t/5", "a1", 0.0, 0.1,
       [](double t) { DomainParams s; s.a1 = t; s.eps_t = -5 * t; return s; }, 0.55},
      {"a1=eps_b/5", "a1", 0.0, 0.1,
       [](double t) { DomainParams s; s.a1 = t; s.eps_b = 5 * t; return s; }, 0.55},
  };
  return families;
}

const SweepFamily* find_sweep_family(const std::string& name) {
  for (const SweepFamily& f : sweep_families())
    if (f.name == name) return &f;
  return nullptr;
}

SweepRow sweep_sample(const SweepFamily& fam, double t, double gate) {
  SweepRow row;
  row.param = t;
  row.sigma = fam.make(t);
  try {
    OptimizeOptions oo;
    oo.gate = gate;
    const OptimizeReport rep = optimize_cut(row.sigma, oo);
    row.opt = rep.cut;
    row.rc_opt = rep.breakdown.value;
    row.pred = predict_cut(row.sigma, PredictOrder::first, gate);
    EvalOptions eo;
    eo.gate = gate;
    row.rc_approx = ratio_cut(row.sigma, row.pred, eo).value;
    row.abs_err = std::fabs(row.rc_approx - row.rc_opt);
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep_family(const SweepFamily& fam, int count,
                                       double gate) {
  std::vector<std::future<SweepRow>> futs;
  futs.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double t = fam.lo + (fam.hi - fam.lo) * i / (count - 1);
    futs.push_back(std::async(std::launch::async,
                              [&fam, t, gate] { return sweep_sample(fam, t, gate); }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(count);
  for (auto& f : futs) rows.push_back(f.get());
  std::sort(rows.begin(), rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.param < b.param; });
  return rows;
}

namespace {

std::vector<DrawPath> domain_with_cuts(const DomainParams& s, const CutParams& opt,
                                       const CutParams& pred) {
  std::vector<DrawPath> paths;
  const CurvilinearQuad q = CurvilinearQuad::from_sigma(
      DomainParams{s.a1, s.a2, s.a3, s.eps_t, s.eps_b, 0, 0});
  for (const BoundaryCurve& side : q.sides)
    paths.push_back({sample_curve(side), "#222222", false, 1.6, false});
  auto cut_path = [&](const CutParams& c, const std::string& color, bool dashed) {
    const Vec2 p0{c.q, y_bottom<double>(s, c.q)};
    const Vec2 p1{c.p, y_top<double>(s, c.p)};
    std::vector<Vec2> pts;
    if (std::fabs(c.theta) < 1e-6) {
      pts = {p0, p1};
    } else {
      const ArcGeometry g = circle_through(p0, p1, c.theta);
      for (int i = 0; i <= 64; ++i) pts.push_back(arc_point(g, i / 64.0));
    }
    paths.push_back({pts, color, dashed, 1.8, false});
  };
  cut_path(opt, "#1f4e9c", false);  // optimal: solid
  cut_path(pred, "#c0392b", true);  // approximate: dot-dashed
  return paths;
}

}  // namespace

std::vector<std::string> write_sweep_outputs(const SweepFamily& fam,
                                             const std::vector<SweepRow>& rows,
                                             const std::string& out_dir,
                                             bool csv, bool svg) {
  fs::create_directories(out_dir);
  std::string slug = fam.name;
  for (char& c : slug)
    if (c == '/' || c == '\\') c = '-';
  const std::string stem = (fs::path(out_dir) / ("sweep-" + slug)).string();
  std::vector<std::string> written;

  if (csv) {
    CsvTable t;
    t.header = {"param",  "rc_opt",    "rc_approx", "abs_err", "q_opt", "p_opt",
                "theta_opt", "q_pred", "p_pred",   "theta_pred", "status"};
    for (const SweepRow& r : rows) {
      if (r.ok)
        t.rows.push_back({fmt(r.param), fmt(r.rc_opt), fmt(r.rc_approx),
                          fmt(r.abs_err), fmt(r.opt.q), fmt(r.opt.p),
                          fmt(r.opt.theta), fmt(r.pred.q), fmt(r.pred.p),
                          fmt(r.pred.theta), "ok"});
      else
        t.rows.push_back({fmt(r.param), "", "", "", "", "", "", "", "", "",
                          "failed: " + r.error});
    }
    write_text_file(stem + ".csv", t.to_string());
    written.push_back(stem + ".csv");
  }
  if (svg) {
    PlotSeries opt{"optimal RC", {}, "#1f4e9c", false};
    PlotSeries approx{"approximate RC", {}, "#c0392b", true};
    PlotSeries err{"absolute error", {}, "#1f4e9c", false};
    for (const SweepRow& r : rows) {
      if (!r.ok) continue;
      opt.points.push_back({r.param, r.rc_opt});
      approx.points.push_back({r.param, r.rc_approx});
      err.points.push_back({r.param, r.abs_err});
    }
    write_text_file(stem + "-values.svg",
                    line_plot_svg("ratio cut: optimal vs approximate",
                                  fam.param_label, "RC", {opt, approx}));
    write_text_file(stem + "-error.svg",
                    line_plot_svg("approximation error", fam.param_label,
                                  "|RC_approx - RC_opt|", {err}));
    written.push_back(stem + "-values.svg");
    written.push_back(stem + "-error.svg");
    const SweepRow* extremal = nullptr;
    for (const SweepRow& r : rows)
      if (r.ok &&
          (extremal == nullptr || std::fabs(r.param) > std::fabs(extremal->param)))
        extremal = &r;
    if (extremal != nullptr) {
      write_text_file(stem + "-extremal.svg",
                      drawing_svg(domain_with_cuts(extremal->sigma, extremal->opt,
                                                   extremal->pred),
                                  {}, 480,
                                  fam.param_label + " = " + fmt(extremal->param)));
      written.push_back(stem + "-extremal.svg");
    }
  }
  return written;
}

// ---------------------------------------------------------------------------

RectangleSearch exhaustive_rectangle_cut_search(double a, double b,
                                                int boundary_n, int theta_n,
                                                double theta_max) {
  if (!(a > 0) || !(b > 0)) throw DomainError("rectangle sides must be positive");
  const double area = a * b;
  const double per = 2 * (a + b);
  std::vector<Vec2> pts;
  pts.reserve(boundary_n);
  std::vector<int> side_id(boundary_n);
  for (int i = 0; i < boundary_n; ++i) {
    const double s = per * i / boundary_n;
    Vec2 p;
    int sd;
    if (s < a) {
      p = {s, 0};
      sd = 0;
    } else if (s < a + b) {
      p = {a, s - a};
      sd = 1;
    } else if (s < 2 * a + b) {
      p = {a - (s - a - b), b};
      sd = 2;
    } else {
      p = {0, per - s};
      sd = 3;
    }
    pts.push_back(p);
    side_id[i] = sd;
  }
  // prefix shoelace sums make each boundary-chain area O(1)
  std::vector<double> prefix(boundary_n + 1, 0.0);
  for (int i = 0; i < boundary_n; ++i)
    prefix[i + 1] = prefix[i] + 0.5 * cross(pts[i], pts[(i + 1) % boundary_n]);

  RectangleSearch out;
  out.best_value = 1e300;
  out.best_adjacent = 1e300;
  out.boundary_step = per / boundary_n;
  out.theta_step = theta_n > 1 ? 2 * theta_max / (theta_n - 1) : 0;

  for (int i = 0; i < boundary_n; ++i)
    for (int j = i + 1; j < boundary_n; ++j) {
      const Vec2 A = pts[i], B = pts[j];
      const double chord = norm(B - A);
      if (chord < 1e-9) continue;
      // non-opposite bucket collects adjacent-side and same-side cuts
      const bool opposite = side_id[i] != side_id[j] &&
                            (side_id[i] % 2) == (side_id[j] % 2);
      for (int k = 0; k < theta_n; ++k) {
        const double theta = -theta_max + 2 * theta_max * k / (theta_n - 1);
        if (theta != 0) {
          bool inside = true;
          const ArcGeometry g = circle_through(A, B, theta);
          for (int m = 1; m < 12 && inside; ++m) {
            const Vec2 q = arc_point(g, m / 12.0);
            inside = q.x > -1e-9 && q.x < a + 1e-9 && q.y > -1e-9 && q.y < b + 1e-9;
          }
          if (!inside) continue;
        }
        // chain i..j closed through the chord, plus the cap beyond the chord;
        // walking i->j then chord j->i makes theta's cap flip sign
        const double area1 = prefix[j] - prefix[i] + 0.5 * cross(B, A) +
                             cap_area<double>(chord, -theta);
        const double area2 = area - area1;
        if (area1 < 1e-6 || area2 < 1e-6) continue;
        const double v = arc_length<double>(chord, theta) * area / (area1 * area2);
        if (opposite) {
          if (v < out.best_value) {
            out.best_value = v;
            out.end_a = A;
            out.end_b = B;
            out.theta = theta;
          }
        } else {
          out.best_adjacent = std::min(out.best_adjacent, v);
        }
      }
    }
  return out;
}

}  // namespace ratiocut
