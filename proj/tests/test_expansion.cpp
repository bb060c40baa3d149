// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "ratiocut/expansion.hpp"
#include "ratiocut/optimize.hpp"

using namespace ratiocut;
using doctest::Approx;

namespace {

int param_id(const std::string& name) {
  for (int i = 0; i < 7; ++i)
    if (name == kSigmaNames[i]) return i;
  throw std::runtime_error("bad name");
}

}  // namespace

TEST_CASE("QuadPoly evaluation") {
  const QuadPoly& base = ExpansionTable::instance().base();
  CHECK(base.eval(0, 0, 0) == Approx(8.0));
  CHECK(base.eval(0, 0, 0.2) == Approx(8 + 7.0 / 18 * 0.04).epsilon(1e-14));
  CHECK(base.eval(0.1, 0, 0) == Approx(8 + 24 * 0.01).epsilon(1e-14));
}

TEST_CASE("transcribed coefficient spot checks") {
  const ExpansionTable& t = ExpansionTable::instance();
  // first-order constants
  const double consts[7] = {-8, -8, 8, 4.0 / 3, -4.0 / 3, -32, -32};
  for (int i = 0; i < 7; ++i)
    CHECK(t.first(i).c0.value() == Approx(consts[i]).epsilon(1e-14));

  const QuadPoly a1 = t.first(param_id("a1"));
  CHECK(a1.cq.value() == Approx(8));
  CHECK(a1.cp.value() == Approx(-8));
  CHECK(a1.ct.value() == Approx(2.0 / 3).epsilon(1e-14));
  CHECK(a1.cqq.value() == Approx(-56));
  CHECK(a1.cqp.value() == Approx(80));
  CHECK(a1.cqt.value() == 0);
  CHECK(a1.cpp.value() == Approx(-56));
  CHECK(a1.cpt.value() == 0);
  CHECK(a1.ctt.value() == Approx(-5.0 / 18).epsilon(1e-14));

  const QuadPoly wlet = t.second(param_id("A_WL"), param_id("eps_t"));
  CHECK(wlet.c0.value() == Approx(-16));
  CHECK(wlet.cq.value() == Approx(32.0 / 3).epsilon(1e-14));
  CHECK(wlet.cp.value() == Approx(32.0 / 3).epsilon(1e-14));
  CHECK(wlet.ct.value() == Approx(-4.0 / 9).epsilon(1e-14));

  const QuadPoly etet = t.second(param_id("eps_t"), param_id("eps_t"));
  CHECK(etet.c0.value() == 0);
  CHECK(etet.cqq.value() == Approx(244.0 / 9).epsilon(1e-14));

  const QuadPoly a1a1 = t.second(param_id("a1"), param_id("a1"));
  CHECK(a1a1.c0.value() == Approx(20));

  // unordered access
  CHECK(t.second(3, 0).c0.value() == t.second(0, 3).c0.value());
  CHECK_THROWS_AS(t.first(9), DomainError);
}

TEST_CASE("coefficient audit against high-precision finite differences") {
  // the central anti-typo guard: every stored coefficient vs a quad-precision
  // mixed partial of the implemented ratio cut
  const auto checks = audit_coefficients();
  CHECK(checks.size() == 360);
  int bad = 0;
  for (const auto& c : checks) {
    if (!c.ok) {
      ++bad;
      // report both values, never silently
      std::printf("coefficient mismatch %s %s: table %.10g vs fd %.10g\n",
                  c.index.c_str(), c.coeff.c_str(), c.table_value, c.fd_value);
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("jacobians and right-hand side") {
  const Mat3 J = jacobian_base();
  CHECK(J[0][0] == Approx(48));
  CHECK(J[0][1] == Approx(-16));
  CHECK(J[0][2] == Approx(4.0 / 3).epsilon(1e-14));
  CHECK(J[1][1] == Approx(48));
  CHECK(J[2][2] == Approx(7.0 / 9).epsilon(1e-14));
  CHECK(J[1][2] == Approx(J[2][1]).epsilon(1e-14));

  DomainParams s;
  s.a1 = 0.1;
  const Mat3 js = jacobian_sigma(s);
  CHECK(js[0][0] == Approx(-11.2).epsilon(1e-12));
  CHECK(js[0][1] == Approx(8.0).epsilon(1e-12));
  CHECK(js[2][2] == Approx(-1.0 / 18).epsilon(1e-12));
  CHECK(js[0][2] == 0);
  CHECK(js[1][2] == 0);

  // L(sigma) is minus the sigma-part of the quadratic model's gradient at
  // the base point; finite differences of rc_quadratic_approx as the oracle
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int k = 0; k < 20; ++k) {
    DomainParams sig;
    sig.a1 = u(rng);
    sig.a2 = u(rng);
    sig.a3 = u(rng);
    sig.eps_t = u(rng);
    sig.eps_b = u(rng);
    sig.A_WL = u(rng);
    sig.A_WR = u(rng);
    const Vec3 L = rhs_L(sig);
    const double h = 1e-6;
    auto grad = [&](int axis) {
      CutParams a{0.5, 0.5, 0}, b{0.5, 0.5, 0};
      (axis == 0 ? a.q : axis == 1 ? a.p : a.theta) += h;
      (axis == 0 ? b.q : axis == 1 ? b.p : b.theta) -= h;
      return (rc_quadratic_approx(sig, a) - rc_quadratic_approx(sig, b)) / (2 * h);
    };
    for (int axis = 0; axis < 3; ++axis)
      CHECK(L[axis] == Approx(-grad(axis)).epsilon(1e-6));
  }

  // a2-only: linear part a2*(8,-8,2/3), quadratic part -(a2^2/2)*(32,-32,4/3)
  DomainParams a2;
  a2.a2 = 0.1;
  const Vec3 L2 = rhs_L(a2);
  CHECK(L2[0] == Approx(0.8 - 0.005 * 32).epsilon(1e-12));
  CHECK(L2[1] == Approx(-0.8 + 0.005 * 32).epsilon(1e-12));
  CHECK(L2[2] == Approx(1.0 / 15 - 0.005 * 4.0 / 3).epsilon(1e-12));
}

TEST_CASE("predict_cut") {
  DomainParams zero;
  const CutParams c0 = predict_cut(zero, PredictOrder::first);
  CHECK(c0.q == Approx(0.5));
  CHECK(c0.p == Approx(0.5));
  CHECK(c0.theta == 0);

  // the single-corner trapezoid: v = a (1/12, -1/6, 1)
  DomainParams trap;
  trap.a2 = 0.1;
  const CutParams c1 = predict_cut(trap, PredictOrder::first);
  CHECK(c1.q == Approx(0.5 + 0.1 / 12).epsilon(1e-13));
  CHECK(c1.p == Approx(0.5 - 0.1 / 6).epsilon(1e-13));
  CHECK(c1.theta == Approx(0.1).epsilon(1e-13));

  // a symmetric wing pair cancels; a lone left wing shifts the cut toward it
  DomainParams wl;
  wl.A_WL = 0.05;
  const CutParams c2 = predict_cut(wl, PredictOrder::first);
  CHECK(c2.q == Approx(0.45).epsilon(1e-13));
  CHECK(c2.p == Approx(0.45).epsilon(1e-13));
  CHECK(c2.theta == Approx(0.0));

  // mirror-symmetric directions keep q = p and theta = 0
  DomainParams sym;
  sym.a1 = sym.a2 = 0.08;
  sym.eps_t = 0.05;
  sym.eps_b = -0.05;
  sym.A_WL = sym.A_WR = 0.03;
  for (PredictOrder ord : {PredictOrder::first, PredictOrder::full}) {
    const CutParams c = predict_cut(sym, ord);
    CHECK(c.q == Approx(c.p).epsilon(1e-12));
    CHECK(std::fabs(c.theta) <= 1e-12);
  }

  DomainParams wild;
  wild.a1 = 0.3;
  CHECK_THROWS_AS(predict_cut(wild, PredictOrder::first), GateError);
}

TEST_CASE("predictor error is quadratic in the parameters") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  double worst_c = 0;
  for (int k = 0; k < 40; ++k) {
    DomainParams s;
    s.a1 = u(rng);
    s.a2 = u(rng);
    s.a3 = u(rng);
    s.eps_t = u(rng);
    s.eps_b = u(rng);
    s.A_WL = u(rng);
    s.A_WR = u(rng);
    const CutParams pred = predict_cut(s, PredictOrder::first);
    const OptimizeReport opt = optimize_cut(s);
    const double dq = pred.q - opt.cut.q, dp = pred.p - opt.cut.p,
                 dt = pred.theta - opt.cut.theta;
    const double diff = std::sqrt(dq * dq + dp * dp + dt * dt);
    worst_c = std::max(worst_c, diff / (s.max_abs() * s.max_abs()));
  }
  CHECK(worst_c <= 50.0);

  // the full-order predictor beats the first-order one on average
  std::mt19937_64 rng2(18);
  double sum_first = 0, sum_full = 0;
  for (int k = 0; k < 15; ++k) {
    DomainParams s;
    s.a1 = u(rng2);
    s.a2 = u(rng2);
    s.eps_t = u(rng2);
    const OptimizeReport opt = optimize_cut(s);
    auto dist = [&](const CutParams& c) {
      const double dq = c.q - opt.cut.q, dp = c.p - opt.cut.p,
                   dt = c.theta - opt.cut.theta;
      return std::sqrt(dq * dq + dp * dp + dt * dt);
    };
    sum_first += dist(predict_cut(s, PredictOrder::first));
    sum_full += dist(predict_cut(s, PredictOrder::full));
  }
  CHECK(sum_full < sum_first);
}

TEST_CASE("rc_quadratic_approx") {
  DomainParams zero;
  CHECK(rc_quadratic_approx(zero, {0.5, 0.5, 0}) == Approx(8.0));
  CHECK(rc_quadratic_approx(zero, {0.5, 0.5, 0.2}) ==
        Approx(8 + 7.0 / 18 * 0.04).epsilon(1e-14));

  // table pair entries are raw partials, so the diagonal Taylor term carries
  // the 1/2: along the a1 line RC = 8 - 8 a1 + 10 a1^2 exactly
  DomainParams a1;
  a1.a1 = 0.1;
  CHECK(rc_quadratic_approx(a1, {0.5, 0.5, 0}) ==
        Approx(8 - 0.8 + 0.5 * 0.01 * 20).epsilon(1e-14));
  const double exact = double(rc_value_raw<double>(a1, 0.5, 0.5, 0.0));
  CHECK(std::fabs(rc_quadratic_approx(a1, {0.5, 0.5, 0}) - exact) <= 0.013);

  // cubic error against the exact evaluator
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 60; ++k) {
    const double scale = 0.02 + 0.08 * (k % 5) / 4.0;
    DomainParams s;
    s.a1 = scale * u(rng);
    s.a2 = scale * u(rng);
    s.a3 = scale * u(rng);
    s.eps_t = scale * u(rng);
    s.eps_b = scale * u(rng);
    s.A_WL = scale * u(rng);
    s.A_WR = scale * u(rng);
    const CutParams c{0.5 + scale * 0.3 * u(rng), 0.5 + scale * 0.3 * u(rng),
                      scale * u(rng)};
    const double exact = double(rc_value_raw<double>(s, c.q, c.p, c.theta));
    const double approx = rc_quadratic_approx(s, c);
    const double size = s.max_abs() + std::fabs(c.q - 0.5) + std::fabs(c.p - 0.5) +
                        std::fabs(c.theta);
    // measured cubic constant over this sampling is ~2.25e3 (the wing
    // directions dominate: d^3 RC / dA_WL^3 is ~3e3 at the base point)
    CHECK(std::fabs(approx - exact) <= 2500.0 * size * size * size);
  }
}

TEST_CASE("coefficients.json round trip and drift detection") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ratiocut-test-json";
  fs::create_directories(dir);
  const std::string path = (dir / "coefficients.json").string();
  write_coefficients_json(path);
  CHECK(compare_coefficients_json(path).empty());

  // tampering is caught and the offending index named
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  in.close();
  const auto pos = text.find("-56");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "-57");
  const std::string tampered = (dir / "tampered.json").string();
  std::ofstream(tampered) << text;
  const auto bad = compare_coefficients_json(tampered);
  CHECK_FALSE(bad.empty());
}
