// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ratiocut/expansion.hpp"

namespace ratiocut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Light validity screen for candidate cuts during search: positive areas and
// a coarse arc-containment sample. The final answer is re-checked by the
// full evaluator.
bool roughly_valid(const DomainParams& s, const CutParams& c) {
  if (!(c.q > 0 && c.q < 1 && c.p > 0 && c.p < 1)) return false;
  if (!(std::fabs(c.theta) < 3.1)) return false;
  const RcParts<double> parts = rc_parts_raw<double>(s, c.q, c.p, c.theta);
  if (!(parts.area_left > 1e-12) || !(parts.area_right > 1e-12)) return false;
  if (std::fabs(c.theta) >= 1e-6) {
    ArcGeometry g;
    try {
      g = circle_through({c.q, y_bottom<double>(s, c.q)},
                         {c.p, y_top<double>(s, c.p)}, c.theta);
    } catch (const std::exception&) {
      return false;
    }
    for (int i = 1; i < 8; ++i) {
      const Vec2 pt = arc_point(g, i / 8.0);
      if (pt.x < -1e-9 || pt.x > 1 + 1e-9) return false;
      const double x = std::clamp(pt.x, 0.0, 1.0);
      if (pt.y > y_top<double>(s, x) + 1e-9 ||
          pt.y < y_bottom<double>(s, x) - 1e-9)
        return false;
    }
  }
  return true;
}

long double objective(const DomainParams& s, const CutParams& c) {
  if (!roughly_valid(s, c)) return kInf;
  return rc_value_raw<long double>(s, (long double)c.q, (long double)c.p,
                                   (long double)c.theta);
}

CutParams grid_scan(const DomainParams& s, const OptimizeOptions& o) {
  CutParams best{0.5, 0.5, 0};
  double best_v = objective(s, best);
  const int n = std::max(3, o.grid_n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        CutParams c;
        c.q = o.grid_q_lo + (o.grid_q_hi - o.grid_q_lo) * i / (n - 1);
        c.p = o.grid_q_lo + (o.grid_q_hi - o.grid_q_lo) * j / (n - 1);
        c.theta = o.grid_t_lo + (o.grid_t_hi - o.grid_t_lo) * k / (n - 1);
        const double v = objective(s, c);
        if (v < best_v) {
          best_v = v;
          best = c;
        }
      }
  return best;
}

struct NewtonOutcome {
  CutParams cut;
  double gradient_norm = kInf;
  int iterations = 0;
  bool converged = false;
};

NewtonOutcome newton_from(const DomainParams& s, CutParams v,
                          const OptimizeOptions& o) {
  NewtonOutcome out;
  double lambda = 1e-8;
  long double fv = objective(s, v);
  if (!std::isfinite(double(fv))) {
    out.cut = v;
    return out;
  }
  Vec3 g = rc_gradient(s, v, o.fd_step);
  double gn = norm2(g);
  for (int it = 0; it < o.max_iterations; ++it) {
    out.iterations = it;
    out.gradient_norm = gn;
    if (gn <= o.tol) {
      out.converged = true;
      break;
    }
    const Mat3 h = rc_hessian(s, v, o.fd_step);
    bool stepped = false;
    for (int tries = 0; tries < 30 && !stepped; ++tries) {
      Mat3 damped = h;
      for (int d = 0; d < 3; ++d) damped[d][d] += lambda;
      Vec3 delta;
      try {
        delta = solve3(damped, {-g[0], -g[1], -g[2]});
      } catch (const NumericsError&) {
        lambda = std::max(lambda * 10, 1e-6);
        continue;
      }
      CutParams cand{std::clamp(v.q + delta[0], 1e-3, 1 - 1e-3),
                     std::clamp(v.p + delta[1], 1e-3, 1 - 1e-3),
                     std::clamp(v.theta + delta[2], -3.0, 3.0)};
      const long double fc = objective(s, cand);
      if (!std::isfinite(double(fc))) {
        lambda *= 4;
        continue;
      }
      // Accept on a clear objective decrease, or, once decreases drown in
      // round-off near the minimum, on a gradient-norm decrease.
      bool accept = fc < fv - 1e-17L * (1 + std::fabs(double(fv)));
      Vec3 gc{};
      double gcn = 0;
      if (!accept && fc <= fv + 1e-16L * (1 + std::fabs(double(fv)))) {
        gc = rc_gradient(s, cand, o.fd_step);
        gcn = norm2(gc);
        if (gcn < 0.9 * gn) {
          accept = true;
          g = gc;
          gn = gcn;
          v = cand;
          fv = fc;
          lambda = std::max(lambda / 3, 1e-12);
          stepped = true;
          continue;
        }
      }
      if (accept) {
        v = cand;
        fv = fc;
        g = rc_gradient(s, v, o.fd_step);
        gn = norm2(g);
        lambda = std::max(lambda / 3, 1e-12);
        stepped = true;
      } else {
        lambda *= 4;
      }
    }
    if (!stepped) break;  // stalled; caller may fall back to the grid
  }
  out.cut = v;
  out.gradient_norm = gn;
  return out;
}

}  // namespace

OptimizeReport optimize_cut(const DomainParams& s, const OptimizeOptions& opts) {
  s.require_gate(opts.gate);

  CutParams seed{0.5, 0.5, 0};
  if (opts.seed_from_predictor) {
    try {
      seed = predict_cut(s, PredictOrder::full, opts.gate);
    } catch (const std::exception&) {
      seed = predict_cut(s, PredictOrder::first, opts.gate);
    }
    seed.q = std::clamp(seed.q, 0.05, 0.95);
    seed.p = std::clamp(seed.p, 0.05, 0.95);
    seed.theta = std::clamp(seed.theta, -1.5, 1.5);
    if (!roughly_valid(s, seed)) seed = {0.5, 0.5, 0};
  }

  NewtonOutcome run = newton_from(s, seed, opts);
  bool used_grid = false;
  bool psd = run.converged &&
             is_positive_definite(rc_hessian(s, run.cut, opts.fd_step));
  if (!run.converged || !psd) {
    const CutParams g = grid_scan(s, opts);
    NewtonOutcome retry = newton_from(s, g, opts);
    used_grid = true;
    if (retry.converged) {
      const bool retry_psd =
          is_positive_definite(rc_hessian(s, retry.cut, opts.fd_step));
      if (retry_psd &&
          (!run.converged || objective(s, retry.cut) <= objective(s, run.cut))) {
        run = retry;
        psd = true;
      }
    }
  }
  if (!run.converged)
    throw NumericsError("optimize_cut: Newton iteration did not converge");
  if (!psd)
    throw NumericsError("optimize_cut: converged to a saddle point");

  OptimizeReport rep;
  rep.cut = run.cut;
  rep.iterations = run.iterations;
  rep.gradient_norm = run.gradient_norm;
  rep.hessian_psd = psd;
  rep.converged = true;
  rep.used_grid_fallback = used_grid;
  EvalOptions eo;
  eo.gate = opts.gate;
  eo.normalization = opts.normalization;
  rep.breakdown = ratio_cut(s, run.cut, eo);
  return rep;
}

CutParams brute_force_cut(const DomainParams& s, const GridSpec& grid,
                          double gate) {
  s.require_gate(gate);
  if (grid.n_q < 11 || grid.n_p < 11 || grid.n_t < 11)
    throw DomainError("brute_force_cut: grid resolution must be >= 11 per axis");
  CutParams best{0.5, 0.5, 0};
  double best_v = kInf;
  for (int i = 0; i < grid.n_q; ++i)
    for (int j = 0; j < grid.n_p; ++j)
      for (int k = 0; k < grid.n_t; ++k) {
        CutParams c;
        c.q = grid.q_lo + (grid.q_hi - grid.q_lo) * i / (grid.n_q - 1);
        c.p = grid.p_lo + (grid.p_hi - grid.p_lo) * j / (grid.n_p - 1);
        c.theta = grid.t_lo + (grid.t_hi - grid.t_lo) * k / (grid.n_t - 1);
        const double v = objective(s, c);
        if (v < best_v) {
          best_v = v;
          best = c;
        }
      }
  if (!std::isfinite(best_v))
    throw GeometryError("brute_force_cut: no valid cut on the grid");
  return best;
}

}  // namespace ratiocut
