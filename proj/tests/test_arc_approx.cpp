// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ratiocut/arc_approx.hpp"

using namespace ratiocut;
using doctest::Approx;

TEST_CASE("curvature_from_arc") {
  CHECK(curvature_from_arc(0, 0, 0, 0.1, 0).eps_t == Approx(-0.05).epsilon(1e-14));
  CHECK(curvature_from_arc(0, 0, 0, 0, 0.1).eps_b == Approx(0.05).epsilon(1e-14));
  CHECK(curvature_from_arc(0.2, 0, 0, 0.1, 0).eps_t ==
        Approx(-0.052).epsilon(1e-14));
  CHECK_THROWS_AS(curvature_from_arc(0, 0, 0, 1.6, 0), DomainError);
}

TEST_CASE("matched curvature reproduces the circular cap area to cubic order") {
  // parabolic cap above the top chord has area -eps_t/6 for any corner
  // offsets; the circular cap area comes from quadrature of the arc
  for (double theta : {0.2, 0.1, 0.05}) {
    const double a1 = 0.2, a2 = 0.0;
    CircularTrapezoid c{a1, a2, 0, theta, 0};
    const double chord2 = 1 + (a1 - a2) * (a1 - a2);
    auto line = [&](double x) { return (0.5 + a1) * (1 - x) + (0.5 + a2) * x; };
    const double cap_circ =
        oracles::integrate([&](double x) { return c.y_top(x) - line(x); }, 0, 1);
    CHECK(cap_circ == Approx(cap_area<double>(std::sqrt(chord2), theta)).epsilon(1e-9));
    const double eps_t = curvature_from_arc(a1, a2, 0, theta, 0).eps_t;
    const double cap_par = -eps_t / 6;
    CHECK(std::fabs(cap_circ - cap_par) <= 0.02 * theta * theta * theta);
  }
}

TEST_CASE("gap report at zero curvature") {
  const GapReport g = parabolic_circular_gap(0.05, -0.02, 0.01, 0, 0, {0.5, 0.5, 0});
  CHECK(g.sup_gap_top <= 1e-13);
  CHECK(g.sup_gap_bottom <= 1e-13);
  CHECK(g.total_area_gap <= 1e-13);
  CHECK(g.left_area_gap <= 1e-13);
  CHECK(g.rc_gap <= 1e-11);
}

TEST_CASE("cubic scaling of the circular-parabolic gaps") {
  const GapReport at2 = parabolic_circular_gap(0, 0, 0, 0.2, 0, {0.5, 0.5, 0});
  const GapReport at1 = parabolic_circular_gap(0, 0, 0, 0.1, 0, {0.5, 0.5, 0});
  // halving theta divides the area gap by about eight
  CHECK(at2.total_area_gap / at1.total_area_gap == Approx(8.0).epsilon(0.2));
  CHECK(at2.area_scaling_exponent >= 2.7);
  CHECK(at2.rc_scaling_exponent >= 2.7);
}

TEST_CASE("sup-norm curve gap stays quadratic-small") {
  const GapReport g = parabolic_circular_gap(0.1, 0, 0, 0.2, 0, {0.5, 0.5, 0});
  // (1/48)(1+(a1-a2)^2) theta^2 (O(a)+O(theta)) territory
  CHECK(g.sup_gap_top <= 1e-3);
  CHECK(g.sup_gap_top > 0);
}

TEST_CASE("circular trapezoid areas against quadrature") {
  CircularTrapezoid c{0.05, -0.03, 0.02, 0.15, -0.1};
  const double quad = oracles::integrate(
      [&](double x) { return c.y_top(x) - c.y_bottom(x); }, 0, 1);
  CHECK(c.total_area() == Approx(quad).epsilon(1e-9));
  // vertical straight cut at abscissa q = p splits along x = q: the left
  // area must equal the quadrature of the strip [0, q]
  const CutParams cut{0.4, 0.4, 0};
  const double strip = oracles::integrate(
      [&](double x) { return c.y_top(x) - c.y_bottom(x); }, 0, cut.q);
  CHECK(c.left_area(cut) == Approx(strip).epsilon(1e-9));
  // straight cut at q=p on a mirror-symmetric circular trapezoid halves it
  CircularTrapezoid sym{0.05, 0.05, 0, 0.15, -0.1};
  const double half = sym.left_area({0.5, 0.5, 0});
  CHECK(half == Approx(sym.total_area() / 2).epsilon(1e-10));
}
