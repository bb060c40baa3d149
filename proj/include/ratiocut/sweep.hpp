// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ratiocut/expansion.hpp"
#include "ratiocut/optimize.hpp"

namespace ratiocut {

// One published comparison family: a parameter path through sigma space and
// the range it is swept over.
struct SweepFamily {
  std::string name;
  std::string param_label;
  double lo = 0, hi = 0;
  DomainParams (*make)(double) = nullptr;
  double wide_gate = DomainParams::kDefaultGate;  // needed past +-0.25
};

// The eight published families.
const std::vector<SweepFamily>& sweep_families();
const SweepFamily* find_sweep_family(const std::string& name);

struct SweepRow {
  double param = 0;
  bool ok = false;
  std::string error;
  double rc_opt = 0, rc_approx = 0, abs_err = 0;
  CutParams opt, pred;
  DomainParams sigma;
};

SweepRow sweep_sample(const SweepFamily& fam, double t, double gate);

// Samples evaluated concurrently; rows returned sorted by parameter value.
std::vector<SweepRow> run_sweep_family(const SweepFamily& fam, int count,
                                       double gate);

// CSV/SVG emission (deterministic bytes). Returns the paths written.
std::vector<std::string> write_sweep_outputs(const SweepFamily& fam,
                                             const std::vector<SweepRow>& rows,
                                             const std::string& out_dir,
                                             bool csv, bool svg);

// ---------------------------------------------------------------------------
// Exhaustive straight+arc cut search on an a x b rectangle: endpoints on a
// boundary grid, opening angles on a theta grid; used by cmd_verify and the
// acceptance suite. Values use the area-weighted ratio-cut convention.
struct RectangleSearch {
  double best_value = 0;          // over opposite-side cuts
  double best_adjacent = 0;       // over adjacent-side cuts
  Vec2 end_a{}, end_b{};
  double theta = 0;
  double boundary_step = 0;
  double theta_step = 0;
};

RectangleSearch exhaustive_rectangle_cut_search(double a, double b,
                                                int boundary_n, int theta_n,
                                                double theta_max = 0.4);

}  // namespace ratiocut
