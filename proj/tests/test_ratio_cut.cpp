// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratiocut/expansion.hpp"
#include "ratiocut/optimize.hpp"

using namespace ratiocut;
using doctest::Approx;

namespace {

DomainParams random_sigma(std::mt19937_64& rng, double mag) {
  std::uniform_real_distribution<double> u(-mag, mag);
  DomainParams s;
  s.a1 = u(rng);
  s.a2 = u(rng);
  s.a3 = u(rng);
  s.eps_t = u(rng);
  s.eps_b = u(rng);
  s.A_WL = u(rng);
  s.A_WR = u(rng);
  return s;
}

}  // namespace

TEST_CASE("chord_length") {
  DomainParams zero;
  CHECK(chord_length(zero, {0.5, 0.5, 0}) == Approx(0.5).epsilon(1e-14));
  CHECK(chord_length(zero, {0.0, 1.0, 0}) ==
        Approx(std::sqrt(1.25)).epsilon(1e-14));
  DomainParams s;
  s.a1 = 0.1;
  // y_top(1/2) = 1/2 + a1/2 = 0.55, vertical chord
  CHECK(chord_length(s, {0.5, 0.5, 0}) == Approx(0.55).epsilon(1e-14));
  CHECK_THROWS_AS(chord_length(zero, {-0.1, 0.5, 0}), DomainError);
}

TEST_CASE("total_area") {
  DomainParams zero;
  CHECK(total_area(zero) == Approx(0.5).epsilon(1e-14));
  DomainParams s1;
  s1.eps_t = 0.3;  // past the default gate; the gate is a configurable knob
  const double quad = oracles::integrate(
      [&](double x) { return y_top<double>(s1, x) - y_bottom<double>(s1, x); }, 0, 1);
  CHECK(total_area(s1, 0.35) == Approx(quad).epsilon(1e-12));
  CHECK(total_area(s1, 0.35) == Approx(0.45).epsilon(1e-12));
  CHECK_THROWS_AS(total_area(s1), GateError);
  DomainParams s2;
  s2.A_WL = 0.05;
  CHECK(total_area(s2) == Approx(0.55).epsilon(1e-14));
  DomainParams wild;
  wild.a1 = 0.4;
  CHECK_THROWS_AS(total_area(wild), GateError);
}

TEST_CASE("left_area") {
  DomainParams zero;
  CHECK(left_area(zero, {0.5, 0.5, 0}) == Approx(0.25).epsilon(1e-14));
  CHECK(left_area(zero, {0.5, 0.5, 0.2}) ==
        Approx(0.25 + cap_area<double>(0.5, 0.2)).epsilon(1e-14));
  CHECK(left_area(zero, {0.5, 0.5, 0.2}) == Approx(0.254172).epsilon(1e-5));
  // trapezoidal slice between x = 0.4 and 0.6; shoelace oracle
  CHECK(left_area(zero, {0.4, 0.6, 0}) ==
        Approx(oracles::shoelace({{0, 0}, {0.4, 0}, {0.6, 0.5}, {0, 0.5}}))
            .epsilon(1e-14));
  // arc escaping through the left wall is an error, not a clipped value
  CHECK_THROWS_AS(left_area(zero, {0.02, 0.02, -0.8}), GeometryError);
}

TEST_CASE("ratio_cut values") {
  DomainParams zero;
  const RatioCutBreakdown base = ratio_cut(zero, {0.5, 0.5, 0});
  CHECK(base.value == Approx(8.0).epsilon(1e-12));
  CHECK(base.cut_length == Approx(0.5).epsilon(1e-14));
  CHECK_FALSE(base.arc.has_value());

  const RatioCutBreakdown bent = ratio_cut(zero, {0.5, 0.5, 0.2});
  const double len = arc_length<double>(0.5, 0.2);
  const double al = 0.25 + cap_area<double>(0.5, 0.2);
  CHECK(bent.value == Approx(len / (al * (0.5 - al))).epsilon(1e-13));
  CHECK(bent.value == Approx(8.0156).epsilon(2e-5));
  // quadratic model coefficient of theta^2 is 7/18
  CHECK(bent.value == Approx(8 + 7.0 / 18 * 0.04).epsilon(5e-6));
  CHECK(bent.arc.has_value());

  // breakdown invariants
  CHECK(bent.value ==
        Approx(bent.cut_length / (bent.area_left * bent.area_right)).epsilon(1e-12));
  CHECK(bent.area_left + bent.area_right == Approx(total_area(zero)).epsilon(1e-9));

  // area-weighted convention multiplies by the total area
  EvalOptions eo;
  eo.normalization = Normalization::area_weighted;
  CHECK(ratio_cut(zero, {0.5, 0.5, 0}, eo).value == Approx(4.0).epsilon(1e-12));

  // a better cut than the base point exists off symmetry
  DomainParams s;
  s.a1 = 0.1;
  const double at_base = ratio_cut(s, {0.5, 0.5, 0}).value;
  const double at_pred = ratio_cut(s, predict_cut(s, PredictOrder::first)).value;
  CHECK(at_pred < at_base);
}

TEST_CASE("rc_gradient and rc_hessian at the symmetric point") {
  DomainParams zero;
  const Vec3 g = rc_gradient(zero, {0.5, 0.5, 0});
  CHECK(std::fabs(g[0]) <= 1e-8);
  CHECK(std::fabs(g[1]) <= 1e-8);
  CHECK(std::fabs(g[2]) <= 1e-8);

  const Mat3 h = rc_hessian(zero, {0.5, 0.5, 0});
  const double J[3][3] = {{48, -16, 4.0 / 3}, {-16, 48, 4.0 / 3},
                          {4.0 / 3, 4.0 / 3, 7.0 / 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(h[i][j] == Approx(J[i][j]).epsilon(1e-6));
      CHECK(h[i][j] == Approx(h[j][i]).epsilon(1e-6));
    }

  // near the base point the gradient is J * v to leading order
  const Vec3 g2 = rc_gradient(zero, {0.51, 0.5, 0});
  CHECK(g2[0] == Approx(0.48).epsilon(2e-2));
  CHECK(g2[1] == Approx(-0.16).epsilon(2e-2));
  CHECK(g2[2] == Approx(4.0 / 3 * 0.01).epsilon(2e-2));
}

TEST_CASE("optimize_cut") {
  DomainParams zero;
  const OptimizeReport r0 = optimize_cut(zero);
  CHECK(r0.cut.q == Approx(0.5).epsilon(1e-12));
  CHECK(r0.cut.p == Approx(0.5).epsilon(1e-12));
  CHECK(std::fabs(r0.cut.theta) <= 1e-12);
  CHECK(r0.breakdown.value == Approx(8.0).epsilon(1e-12));
  CHECK(r0.hessian_psd);
  CHECK(r0.gradient_norm <= 1e-10);

  // single-corner trapezoid: optimum near (1/2 + a/12, 1/2 - a/6, a)
  const double a = 0.1;
  DomainParams trap;
  trap.a2 = a;
  const OptimizeReport r1 = optimize_cut(trap);
  const double dq = r1.cut.q - (0.5 + a / 12);
  const double dp = r1.cut.p - (0.5 - a / 6);
  const double dt = r1.cut.theta - a;
  CHECK(std::sqrt(dq * dq + dp * dp + dt * dt) <= 5 * a * a);

  // mirror family lands on the mirrored cut
  DomainParams trap_m;
  trap_m.a1 = a;
  const OptimizeReport r2 = optimize_cut(trap_m);
  CHECK(r2.cut.q == Approx(1 - r1.cut.q).epsilon(1e-7));
  CHECK(r2.cut.p == Approx(1 - r1.cut.p).epsilon(1e-7));
  CHECK(r2.cut.theta == Approx(-r1.cut.theta).epsilon(1e-7));

  // left-right symmetric wings keep the symmetric cut
  DomainParams wings;
  wings.A_WL = wings.A_WR = 0.05;
  const OptimizeReport r3 = optimize_cut(wings);
  CHECK(r3.cut.q == Approx(0.5).epsilon(1e-9));
  CHECK(r3.cut.p == Approx(0.5).epsilon(1e-9));
  CHECK(std::fabs(r3.cut.theta) <= 1e-9);
}

TEST_CASE("optimizer gradient norm on random domains") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 25; ++k) {
    const DomainParams s = random_sigma(rng, 0.1);
    const OptimizeReport r = optimize_cut(s);
    CHECK(norm2(rc_gradient(s, r.cut)) <= 1e-8);
  }
}

TEST_CASE("brute_force_cut") {
  DomainParams zero;
  const CutParams c0 = brute_force_cut(zero);  // 41^3 default grid
  CHECK(c0.q == Approx(0.5).epsilon(1e-12));
  CHECK(c0.p == Approx(0.5).epsilon(1e-12));
  CHECK(std::fabs(c0.theta) <= 1e-12);

  DomainParams s;
  s.a1 = 0.1;
  GridSpec fine;
  fine.n_q = fine.n_p = fine.n_t = 81;
  const CutParams bf = brute_force_cut(s, fine);
  const OptimizeReport opt = optimize_cut(s);
  CHECK(std::fabs(bf.q - opt.cut.q) <= 0.4 / 80 + 1e-12);
  CHECK(std::fabs(bf.p - opt.cut.p) <= 0.4 / 80 + 1e-12);
  CHECK(std::fabs(bf.theta - opt.cut.theta) <= 0.8 / 80 + 1e-12);

  // the mirror image of the a1 family optimum is the a2 family optimum
  DomainParams m;
  m.a2 = 0.1;
  const CutParams bfm = brute_force_cut(m, fine);
  CHECK(bfm.q == Approx(1 - bf.q).epsilon(1e-12));
  CHECK(bfm.p == Approx(1 - bf.p).epsilon(1e-12));
  CHECK(bfm.theta == Approx(-bf.theta).epsilon(1e-12));

  GridSpec coarse;
  coarse.n_q = 5;
  CHECK_THROWS_AS(brute_force_cut(zero, coarse), DomainError);
}

TEST_CASE("mirror symmetry of the evaluator") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-0.12, 0.12);
  for (int k = 0; k < 50; ++k) {
    const DomainParams s = random_sigma(rng, 0.12);
    const CutParams c{0.5 + 0.2 * u(rng), 0.5 + 0.2 * u(rng), u(rng)};
    const DomainParams ms = mirror(s);
    const CutParams mc{1 - c.q, 1 - c.p, -c.theta};
    EvalOptions eo;
    eo.check_arc_inside = false;
    const double v1 = ratio_cut(s, c, eo).value;
    const double v2 = ratio_cut(ms, mc, eo).value;
    CHECK(v1 == Approx(v2).epsilon(1e-10));
  }
}

TEST_CASE("rectangle_ratio_cut") {
  const RectangleCut r1 = rectangle_ratio_cut(2, 1);
  CHECK(r1.value == Approx(2.0));
  CHECK(r1.vertical);
  CHECK(r1.position == Approx(1.0));
  CHECK_FALSE(r1.degenerate);

  const RectangleCut r2 = rectangle_ratio_cut(1, 1);
  CHECK(r2.value == Approx(4.0));
  CHECK(r2.degenerate);

  const RectangleCut r3 = rectangle_ratio_cut(1, 0.5);
  CHECK(r3.value == Approx(4.0));
  CHECK(r3.position == Approx(0.5));

  // scaling: argmin location scales with the domain, value like 1/length
  for (double s : {0.5, 2.0, 7.0}) {
    const RectangleCut rs = rectangle_ratio_cut(2 * s, 1 * s);
    CHECK(rs.value == Approx(r1.value / s).epsilon(1e-12));
    CHECK(rs.position == Approx(r1.position * s).epsilon(1e-12));
  }
  CHECK_THROWS_AS(rectangle_ratio_cut(0, 1), DomainError);
}

TEST_CASE("excess_area_bound") {
  CHECK(excess_area_bound(1.0, 0.0, 0.01) == 0.0);
  // chord 1, theta 0.2: excess = arc length - chord
  const double excess = arc_length<double>(1.0, 0.2) - 1.0;
  CHECK(excess == Approx(0.001667).epsilon(1e-3));
  const double bound = excess_area_bound(1.0, excess, 0.01);
  CHECK(bound == Approx(1.01 / std::sqrt(6.0) * std::sqrt(excess)).epsilon(1e-13));
  CHECK(cap_area<double>(1.0, 0.2) <= bound);

  const double excess4 = arc_length<double>(1.0, 0.4) - 1.0;
  CHECK(cap_area<double>(1.0, 0.4) <= excess_area_bound(1.0, excess4, 0.05));

  CHECK_THROWS_AS(excess_area_bound(1.0, 0.2, 0.01), GateError);  // regime
  CHECK_THROWS_AS(excess_area_bound(1.0, -0.1, 0.01), DomainError);
}

TEST_CASE("optimize agrees with brute force on random domains") {
  std::mt19937_64 rng(77);
  GridSpec grid;
  grid.n_q = grid.n_p = 41;
  grid.n_t = 41;
  grid.q_lo = grid.p_lo = 0.35;
  grid.q_hi = grid.p_hi = 0.65;
  grid.t_lo = -0.3;
  grid.t_hi = 0.3;
  const double cell_qp = 0.3 / 40, cell_t = 0.6 / 40;
  for (int k = 0; k < 10; ++k) {
    const DomainParams s = random_sigma(rng, 0.08);
    const CutParams bf = brute_force_cut(s, grid);
    const OptimizeReport opt = optimize_cut(s);
    CHECK(std::fabs(bf.q - opt.cut.q) <= cell_qp + 1e-9);
    CHECK(std::fabs(bf.p - opt.cut.p) <= cell_qp + 1e-9);
    CHECK(std::fabs(bf.theta - opt.cut.theta) <= cell_t + 1e-9);
  }
}
