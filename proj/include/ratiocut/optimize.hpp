// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ratiocut/derivatives.hpp"
#include "ratiocut/ratio_cut.hpp"

namespace ratiocut {

struct OptimizeReport {
  CutParams cut;
  RatioCutBreakdown breakdown;
  int iterations = 0;
  double gradient_norm = 0;
  bool hessian_psd = false;
  bool converged = false;
  bool used_grid_fallback = false;
};

struct OptimizeOptions {
  double gate = DomainParams::kDefaultGate;
  double tol = 1e-10;          // gradient norm at convergence
  int max_iterations = 100;
  double fd_step = 1e-5;
  bool seed_from_predictor = true;
  // grid fallback when Newton stalls or lands on a saddle
  int grid_n = 21;
  double grid_q_lo = 0.3, grid_q_hi = 0.7;
  double grid_t_lo = -0.5, grid_t_hi = 0.5;
  Normalization normalization = Normalization::plain;
};

// Damped (Levenberg) Newton on the finite-difference gradient/Hessian,
// seeded at the series predictor, with a grid-scan fallback. Verifies a
// positive-definite Hessian at the reported minimum.
OptimizeReport optimize_cut(const DomainParams& s, const OptimizeOptions& opts = {});

struct GridSpec {
  int n_q = 41, n_p = 41, n_t = 41;
  double q_lo = 0.3, q_hi = 0.7;
  double p_lo = 0.3, p_hi = 0.7;
  double t_lo = -0.4, t_hi = 0.4;
};

// Exhaustive minimum of the ratio cut over the grid; test/verify oracle.
CutParams brute_force_cut(const DomainParams& s, const GridSpec& grid = {},
                          double gate = DomainParams::kDefaultGate);

}  // namespace ratiocut
