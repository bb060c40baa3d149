// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "ratiocut/dynamics.hpp"

namespace ratiocut {

struct PointCloud {
  std::vector<Vec2> points;
  std::uint64_t seed = 0;
};

// Uniform rejection sampling inside the quad (boundary polygonized once);
// deterministic per seed. Errors out when the acceptance rate collapses.
PointCloud sample_domain(const CurvilinearQuad& q, int n, std::uint64_t seed);

struct KernelSpec {
  int knn = 10;
  double bandwidth = 0;  // 0: median of the kNN distances
};

// Symmetric nonnegative affinity graph with zero diagonal (Gaussian weights
// on the symmetrized kNN relation).
struct AffinityGraph {
  int n = 0;
  std::vector<int> edge_u, edge_v;   // undirected edges, u < v
  std::vector<double> edge_w;
  std::vector<int> row_ptr, col_idx; // CSR over both directions
  std::vector<double> csr_w;
  std::vector<double> degree;        // sum of incident weights
  bool connected = false;
  double bandwidth = 0;
  int max_adjacency = 0;             // max unweighted degree

  static AffinityGraph from_edges(int n,
                                  const std::vector<std::tuple<int, int, double>>& edges);
};

AffinityGraph build_affinity(const PointCloud& cloud, const KernelSpec& spec);

// (Delta_p f)(i) = sum_j w_ij sign(f_i - f_j) |f_i - f_j|^{p-1}; sign(0) = 0.
std::vector<double> graph_p_laplacian_apply(const AffinityGraph& g,
                                            const std::vector<double>& f, double p);

// <f, Delta_p f> = (1/2) sum_ij w_ij |f_i - f_j|^p.
double energy(const AffinityGraph& g, const std::vector<double>& f, double p);

// min_c sum_i |f_i - c|^p; at p = 1 attained at any median (the lowest one
// is used for centering).
double var_p(const std::vector<double>& f, double p);
double lower_median(std::vector<double> f);

// F_p^(2)(f) = energy / var_p; constant f is the trivial eigenvector.
double functional_F2(const AffinityGraph& g, const std::vector<double>& f, double p);

// Approximate Fiedler vector of D - W (power iteration with deflation).
std::vector<double> fiedler_vector(const AffinityGraph& g);

struct IpmOptions {
  int max_outer = 500;
  double rel_tol = 1e-6;
  int max_inner = 400;
  int starts = 5;        // thresholded Fiedler + seeded random starts
  std::uint64_t seed = 1;
};

struct EigenResult {
  std::vector<double> f;        // median-centered, unit norm
  double lambda = 0;            // attained F_1^(2)
  int iterations = 0;
  bool converged = false;
  std::vector<double> history;  // accepted F2 values, non-increasing
  int best_start = 0;
};

// Nonlinear inverse power method for the second 1-Laplacian eigenvector:
// each outer step solves min_u 1/2 ||u - lambda_k v_k||^2 + TV_w(u) through
// an accelerated projected (clamped) dual ascent, then median-centers and
// normalizes; candidates that fail to decrease F2 are rejected, so the
// recorded history is non-increasing by construction.
EigenResult inverse_power_method(const AffinityGraph& g, const IpmOptions& opts = {});

// Sign split; zeros join the smaller side (ties favor the negative side).
std::pair<std::vector<int>, std::vector<int>> bipartition(const std::vector<double>& f);

// cut(S, S^c) * n / (|S| |S^c|); side[] holds 0/1 labels.
double discrete_ratio_cut(const AffinityGraph& g, const std::vector<char>& side);

// cut(S, S^c) / min(|S|, |S^c|): the two-valued restriction of F2 at p = 1.
double two_valued_f2(const AffinityGraph& g, const std::vector<char>& side);

struct BruteCut {
  double value = 0;          // product-normalized optimum
  std::vector<char> side;
  double f2_value = 0;       // cut/min-side optimum (what F2 minimizes)
  std::vector<char> f2_side;
};
// Exhaustive optima over all nontrivial bipartitions; n <= 20.
BruteCut brute_force_bipartition(const AffinityGraph& g);

}  // namespace ratiocut
