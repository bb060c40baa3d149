// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <queue>
#include <random>

namespace ratiocut {

namespace {

std::vector<Vec2> polygonize(const CurvilinearQuad& q, int per_side = 512) {
  std::vector<Vec2> poly;
  poly.reserve(4 * per_side);
  for (const BoundaryCurve& s : q.sides)
    for (int i = 0; i < per_side; ++i)
      poly.push_back(s.point(s.t0 + (s.t1 - s.t0) * i / per_side));
  return poly;
}

bool point_in_polygon(const std::vector<Vec2>& poly, Vec2 p) {
  bool inside = false;
  const size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

PointCloud sample_domain(const CurvilinearQuad& q, int n, std::uint64_t seed) {
  if (n < 100) throw DomainError("sample_domain: need at least 100 points");
  const std::vector<Vec2> poly = polygonize(q);
  double xlo = poly[0].x, xhi = poly[0].x, ylo = poly[0].y, yhi = poly[0].y;
  for (const Vec2& p : poly) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  if (!(xhi > xlo) || !(yhi > ylo))
    throw GeometryError("sample_domain: degenerate bounding box");

  PointCloud cloud;
  cloud.seed = seed;
  cloud.points.reserve(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(xlo, xhi), uy(ylo, yhi);
  long attempts = 0;
  while (int(cloud.points.size()) < n) {
    const Vec2 p{ux(rng), uy(rng)};
    ++attempts;
    if (point_in_polygon(poly, p)) cloud.points.push_back(p);
    if (attempts > 10000 && double(cloud.points.size()) / double(attempts) < 0.01)
      throw GeometryError("sample_domain: acceptance rate below 1%");
  }
  return cloud;
}

AffinityGraph AffinityGraph::from_edges(
    int n, const std::vector<std::tuple<int, int, double>>& edges) {
  AffinityGraph g;
  g.n = n;
  for (const auto& [u, v, w] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("affinity edge endpoint out of range");
    if (u == v) throw DomainError("affinity graph must have zero diagonal");
    if (w < 0) throw DomainError("affinity weights must be nonnegative");
    if (w == 0) continue;
    g.edge_u.push_back(std::min(u, v));
    g.edge_v.push_back(std::max(u, v));
    g.edge_w.push_back(w);
  }
  // CSR over both directions
  std::vector<int> count(n, 0);
  for (size_t e = 0; e < g.edge_u.size(); ++e) {
    ++count[g.edge_u[e]];
    ++count[g.edge_v[e]];
  }
  g.row_ptr.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) g.row_ptr[i + 1] = g.row_ptr[i] + count[i];
  g.col_idx.assign(g.row_ptr[n], 0);
  g.csr_w.assign(g.row_ptr[n], 0);
  std::vector<int> fill(g.row_ptr.begin(), g.row_ptr.end() - 1);
  for (size_t e = 0; e < g.edge_u.size(); ++e) {
    const int u = g.edge_u[e], v = g.edge_v[e];
    const double w = g.edge_w[e];
    g.col_idx[fill[u]] = v;
    g.csr_w[fill[u]++] = w;
    g.col_idx[fill[v]] = u;
    g.csr_w[fill[v]++] = w;
  }
  g.degree.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) g.degree[i] += g.csr_w[k];
    g.max_adjacency = std::max(g.max_adjacency, g.row_ptr[i + 1] - g.row_ptr[i]);
  }
  // connectivity
  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    const int i = bfs.front();
    bfs.pop();
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      if (!seen[g.col_idx[k]]) {
        seen[g.col_idx[k]] = 1;
        ++reached;
        bfs.push(g.col_idx[k]);
      }
  }
  g.connected = (reached == n) && n > 0;
  return g;
}

AffinityGraph build_affinity(const PointCloud& cloud, const KernelSpec& spec) {
  const int n = int(cloud.points.size());
  if (n < 2) throw DomainError("build_affinity: need at least two points");
  const int k = std::min(spec.knn, n - 1);
  if (k < 1) throw DomainError("build_affinity: kNN count must be positive");

  // brute-force kNN; desk scale
  std::vector<std::vector<std::pair<double, int>>> nbrs(n);
  std::vector<double> knn_dists;
  knn_dists.reserve(size_t(n) * k);
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, int>> d;
    d.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      d.emplace_back(norm(cloud.points[i] - cloud.points[j]), j);
    }
    std::partial_sort(d.begin(), d.begin() + k, d.end());
    d.resize(k);
    for (const auto& [dist, j] : d) knn_dists.push_back(dist);
    nbrs[i] = std::move(d);
  }
  double h = spec.bandwidth;
  if (h <= 0) {
    std::nth_element(knn_dists.begin(), knn_dists.begin() + knn_dists.size() / 2,
                     knn_dists.end());
    h = knn_dists[knn_dists.size() / 2];
  }
  if (!(h > 0)) throw GraphError("build_affinity: zero kernel bandwidth");

  std::vector<std::tuple<int, int, double>> edges;
  for (int i = 0; i < n; ++i)
    for (const auto& [dist, j] : nbrs[i])
      if (i < j || std::none_of(nbrs[j].begin(), nbrs[j].end(),
                                [&](const auto& pr) { return pr.second == i; }))
        edges.emplace_back(std::min(i, j), std::max(i, j),
                           std::exp(-dist * dist / (h * h)));
  AffinityGraph g = AffinityGraph::from_edges(n, edges);
  g.bandwidth = h;
  return g;
}

std::vector<double> graph_p_laplacian_apply(const AffinityGraph& g,
                                            const std::vector<double>& f,
                                            double p) {
  if (int(f.size()) != g.n)
    throw DomainError("graph_p_laplacian_apply: dimension mismatch");
  if (!(p >= 1)) throw DomainError("graph_p_laplacian_apply: p must be >= 1");
  std::vector<double> out(g.n, 0.0);
  for (int i = 0; i < g.n; ++i) {
    double acc = 0;
    for (int kk = g.row_ptr[i]; kk < g.row_ptr[i + 1]; ++kk) {
      const double d = f[i] - f[g.col_idx[kk]];
      if (d == 0) continue;
      const double mag = (p == 1) ? 1.0 : std::pow(std::fabs(d), p - 1);
      acc += g.csr_w[kk] * (d > 0 ? mag : -mag);
    }
    out[i] = acc;
  }
  return out;
}

double energy(const AffinityGraph& g, const std::vector<double>& f, double p) {
  if (int(f.size()) != g.n) throw DomainError("energy: dimension mismatch");
  double acc = 0;
  for (size_t e = 0; e < g.edge_u.size(); ++e) {
    const double d = std::fabs(f[g.edge_u[e]] - f[g.edge_v[e]]);
    acc += g.edge_w[e] * (p == 1 ? d : std::pow(d, p));
  }
  return acc;
}

double lower_median(std::vector<double> f) {
  if (f.empty()) throw DomainError("median of empty vector");
  const size_t k = (f.size() - 1) / 2;
  std::nth_element(f.begin(), f.begin() + k, f.end());
  return f[k];
}

double var_p(const std::vector<double>& f, double p) {
  if (f.empty()) throw DomainError("var_p of empty vector");
  if (!(p >= 1)) throw DomainError("var_p: p must be >= 1");
  auto cost = [&](double c) {
    double acc = 0;
    for (double v : f) acc += (p == 1) ? std::fabs(v - c) : std::pow(std::fabs(v - c), p);
    return acc;
  };
  if (p == 1) return cost(lower_median(f));
  if (p == 2) {
    const double mean = std::accumulate(f.begin(), f.end(), 0.0) / double(f.size());
    return cost(mean);
  }
  // golden-section search on the convex objective
  double lo = *std::min_element(f.begin(), f.end());
  double hi = *std::max_element(f.begin(), f.end());
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = cost(x1), f2 = cost(x2);
  for (int it = 0; it < 200 && b - a > 1e-12 * std::max(1.0, std::fabs(hi)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = cost(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = cost(x2);
    }
  }
  return cost((a + b) / 2);
}

double functional_F2(const AffinityGraph& g, const std::vector<double>& f, double p) {
  const double v = var_p(f, p);
  if (!(v > 1e-300))
    throw GraphError("functional_F2: constant input is the trivial eigenvector");
  return energy(g, f, p) / v;
}

std::vector<double> fiedler_vector(const AffinityGraph& g) {
  if (!g.connected) throw GraphError("fiedler_vector: graph is not connected");
  const int n = g.n;
  const double dmax = *std::max_element(g.degree.begin(), g.degree.end());
  const double shift = 2.0 * dmax + 1.0;  // power iteration on shift*I - L
  std::vector<double> v(n);
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1, 1);
  for (double& x : v) x = u(rng);
  auto project_normalize = [&](std::vector<double>& x) {
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    for (double& xi : x) xi -= mean;
    double nn = 0;
    for (double xi : x) nn += xi * xi;
    nn = std::sqrt(nn);
    if (nn > 0)
      for (double& xi : x) xi /= nn;
  };
  project_normalize(v);
  std::vector<double> w(n);
  for (int it = 0; it < 800; ++it) {
    for (int i = 0; i < n; ++i) {
      double acc = (shift - g.degree[i]) * v[i];
      for (int kk = g.row_ptr[i]; kk < g.row_ptr[i + 1]; ++kk)
        acc += g.csr_w[kk] * v[g.col_idx[kk]];
      w[i] = acc;
    }
    project_normalize(w);
    std::swap(v, w);
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

void center_normalize(std::vector<double>& f) {
  const double med = lower_median(f);
  for (double& x : f) x -= med;
  double nn = 0;
  for (double x : f) nn += x * x;
  nn = std::sqrt(nn);
  if (nn > 0)
    for (double& x : f) x /= nn;
}

// subdifferential selection of var_1 at median-centered f with zero sum
std::vector<double> var1_subgradient(const std::vector<double>& f) {
  const int n = int(f.size());
  std::vector<double> v(n, 0.0);
  int npos = 0, nneg = 0, nzero = 0;
  for (double x : f) {
    if (x > 0) ++npos;
    else if (x < 0) ++nneg;
    else ++nzero;
  }
  const double fill =
      nzero > 0 ? std::clamp(double(nneg - npos) / double(nzero), -1.0, 1.0) : 0.0;
  for (int i = 0; i < n; ++i)
    v[i] = f[i] > 0 ? 1.0 : (f[i] < 0 ? -1.0 : fill);
  return v;
}

// prox_{TV_w}(y) by accelerated dual ascent with clamped dual variables
std::vector<double> prox_tv(const AffinityGraph& g, const std::vector<double>& y,
                            int max_iter) {
  const size_t m = g.edge_u.size();
  std::vector<double> beta(m, 0.0), beta_old(m, 0.0), beta_hat(m, 0.0);
  std::vector<double> u = y;
  const double lip = std::max(1, 2 * g.max_adjacency);
  double t_old = 1;
  for (int it = 0; it < max_iter; ++it) {
    // u = y - B^T beta_hat
    u = y;
    for (size_t e = 0; e < m; ++e) {
      u[g.edge_u[e]] -= beta_hat[e];
      u[g.edge_v[e]] += beta_hat[e];
    }
    double change = 0;
    for (size_t e = 0; e < m; ++e) {
      const double grad = u[g.edge_u[e]] - u[g.edge_v[e]];  // (B u)_e
      double b = beta_hat[e] + grad / lip;
      b = std::clamp(b, -g.edge_w[e], g.edge_w[e]);
      change = std::max(change, std::fabs(b - beta[e]));
      beta_old[e] = beta[e];
      beta[e] = b;
    }
    const double t_new = (1 + std::sqrt(1 + 4 * t_old * t_old)) / 2;
    const double mom = (t_old - 1) / t_new;
    for (size_t e = 0; e < m; ++e)
      beta_hat[e] = beta[e] + mom * (beta[e] - beta_old[e]);
    t_old = t_new;
    if (change < 1e-12) break;
  }
  u = y;
  for (size_t e = 0; e < m; ++e) {
    u[g.edge_u[e]] -= beta[e];
    u[g.edge_v[e]] += beta[e];
  }
  return u;
}

// Best superlevel-set indicator of f under F2, by an incremental threshold
// sweep (the coarea rounding step: thresholding never increases F2).
// Returns the centered, normalized two-valued vector; empty when f has no
// valid threshold (all entries equal).
std::vector<double> best_threshold_indicator(const AffinityGraph& g,
                                             const std::vector<double>& f) {
  const int n = g.n;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return f[a] < f[b]; });
  std::vector<char> in_top(n, 0);
  double cut = 0, best = 1e300;
  int best_k = -1;
  // move vertices into the superlevel side in descending order of f
  for (int k = 1; k < n; ++k) {
    const int v = order[n - k];
    in_top[v] = 1;
    for (int e = g.row_ptr[v]; e < g.row_ptr[v + 1]; ++e)
      cut += in_top[g.col_idx[e]] ? -g.csr_w[e] : g.csr_w[e];
    // a threshold must separate distinct values
    if (f[order[n - k - 1]] == f[order[n - k]]) continue;
    const double val = cut / std::min(k, n - k);
    if (val < best) {
      best = val;
      best_k = k;
    }
  }
  if (best_k < 0) return {};
  std::vector<double> ind(n, 0.0);
  for (int k = 1; k <= best_k; ++k) ind[order[n - k]] = 1.0;
  center_normalize(ind);
  return ind;
}

EigenResult ipm_single_start(const AffinityGraph& g, std::vector<double> f,
                             const IpmOptions& opts) {
  EigenResult res;
  center_normalize(f);
  double lambda = functional_F2(g, f, 1);
  // rounding the start is free and often already optimal on small graphs
  {
    const std::vector<double> r = best_threshold_indicator(g, f);
    if (!r.empty()) {
      const double lr = functional_F2(g, r, 1);
      if (lr < lambda) {
        lambda = lr;
        f = r;
      }
    }
  }
  res.history.push_back(lambda);
  int outer = 0;
  for (; outer < opts.max_outer; ++outer) {
    const std::vector<double> v = var1_subgradient(f);
    std::vector<double> y(g.n);
    for (int i = 0; i < g.n; ++i) y[i] = lambda * v[i];
    std::vector<double> u = prox_tv(g, y, opts.max_inner);
    double nn = 0;
    for (double x : u) nn += x * x;
    if (!(std::sqrt(nn) > 1e-12)) break;  // prox collapsed: stationary
    center_normalize(u);
    double cand;
    try {
      cand = functional_F2(g, u, 1);
    } catch (const GraphError&) {
      break;  // candidate became constant
    }
    // coarea rounding of the iterate
    const std::vector<double> r = best_threshold_indicator(g, u);
    if (!r.empty()) {
      const double lr = functional_F2(g, r, 1);
      if (lr < cand) {
        cand = lr;
        u = r;
      }
    }
    if (!(cand < lambda * (1 - 1e-15))) break;  // no decrease: stop
    f = std::move(u);
    const double rel = (lambda - cand) / lambda;
    lambda = cand;
    res.history.push_back(lambda);
    if (rel < opts.rel_tol) {
      ++outer;
      break;
    }
  }
  res.f = std::move(f);
  res.lambda = lambda;
  res.iterations = outer;
  res.converged = true;
  return res;
}

}  // namespace

EigenResult inverse_power_method(const AffinityGraph& g, const IpmOptions& opts) {
  if (!g.connected)
    throw GraphError("inverse_power_method: graph is not connected");
  if (g.n < 2) throw GraphError("inverse_power_method: graph too small");

  // start 0: thresholded Fiedler vector; others: seeded random sign patterns
  std::vector<std::vector<double>> starts;
  {
    std::vector<double> fied = fiedler_vector(g);
    const double med = lower_median(fied);
    std::vector<double> s(g.n);
    for (int i = 0; i < g.n; ++i) s[i] = fied[i] >= med ? 1.0 : -1.0;
    starts.push_back(std::move(s));
    starts.push_back(std::move(fied));
  }
  for (int k = int(starts.size()); k < std::max(1, opts.starts); ++k) {
    std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL * k);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> s(g.n);
    for (double& x : s) x = u(rng);
    starts.push_back(std::move(s));
  }

  std::vector<std::future<EigenResult>> futs;
  futs.reserve(starts.size());
  for (auto& s : starts)
    futs.push_back(std::async(std::launch::async, [&g, &opts, s]() {
      return ipm_single_start(g, s, opts);
    }));

  EigenResult best;
  bool have = false;
  for (size_t k = 0; k < futs.size(); ++k) {
    EigenResult r = futs[k].get();
    r.best_start = int(k);
    if (!have || r.lambda < best.lambda) {
      best = std::move(r);
      have = true;
    }
  }
  if (!have) throw NumericsError("inverse_power_method: all starts failed");
  return best;
}

std::pair<std::vector<int>, std::vector<int>> bipartition(const std::vector<double>& f) {
  // Median-centered eigenvectors are indicator-like: one side sits at an
  // exact (or round-off) zero plateau, so zeros are classified with a
  // relative tolerance instead of strict signs.
  double scale = 0;
  for (double x : f) scale = std::max(scale, std::fabs(x));
  const double tol = 1e-9 * scale;
  std::vector<int> pos, neg, zero;
  for (int i = 0; i < int(f.size()); ++i) {
    if (f[i] > tol) pos.push_back(i);
    else if (f[i] < -tol) neg.push_back(i);
    else zero.push_back(i);
  }
  if (pos.empty() && neg.empty())
    throw GraphError("bipartition: vector has a single sign, no cut");
  if (pos.empty() || neg.empty()) {
    // the zero plateau is the other side of the cut
    if (zero.empty())
      throw GraphError("bipartition: vector has a single sign, no cut");
    (pos.empty() ? pos : neg) = std::move(zero);
  } else {
    // zeros to the smaller side; ties to the negative side
    auto& smaller = (pos.size() < neg.size()) ? pos : neg;
    smaller.insert(smaller.end(), zero.begin(), zero.end());
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  return {pos, neg};
}

double discrete_ratio_cut(const AffinityGraph& g, const std::vector<char>& side) {
  if (int(side.size()) != g.n) throw DomainError("discrete_ratio_cut: size mismatch");
  double cut = 0;
  long a = 0;
  for (char c : side) a += (c != 0);
  if (a == 0 || a == g.n)
    throw GraphError("discrete_ratio_cut: trivial bipartition");
  for (size_t e = 0; e < g.edge_u.size(); ++e)
    if ((side[g.edge_u[e]] != 0) != (side[g.edge_v[e]] != 0)) cut += g.edge_w[e];
  return cut * double(g.n) / (double(a) * double(g.n - a));
}

double two_valued_f2(const AffinityGraph& g, const std::vector<char>& side) {
  if (int(side.size()) != g.n) throw DomainError("two_valued_f2: size mismatch");
  double cut = 0;
  long a = 0;
  for (char c : side) a += (c != 0);
  if (a == 0 || a == g.n) throw GraphError("two_valued_f2: trivial bipartition");
  for (size_t e = 0; e < g.edge_u.size(); ++e)
    if ((side[g.edge_u[e]] != 0) != (side[g.edge_v[e]] != 0)) cut += g.edge_w[e];
  return cut / double(std::min(a, long(g.n) - a));
}

BruteCut brute_force_bipartition(const AffinityGraph& g) {
  if (g.n < 2 || g.n > 20)
    throw DomainError("brute_force_bipartition: supported for 2 <= n <= 20");
  BruteCut best;
  best.value = std::numeric_limits<double>::infinity();
  best.f2_value = std::numeric_limits<double>::infinity();
  const unsigned long total = 1UL << (g.n - 1);
  std::vector<char> side(g.n, 0);
  for (unsigned long mask = 1; mask < total; ++mask) {
    for (int i = 0; i < g.n - 1; ++i) side[i + 1] = char((mask >> i) & 1);
    side[0] = 0;
    const double v = discrete_ratio_cut(g, side);
    if (v < best.value) {
      best.value = v;
      best.side = side;
    }
    const double f2 = two_valued_f2(g, side);
    if (f2 < best.f2_value) {
      best.f2_value = f2;
      best.f2_side = side;
    }
  }
  return best;
}

}  // namespace ratiocut
