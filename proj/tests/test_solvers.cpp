#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "elastica/residuals.hpp"
#include "elastica/solvers.hpp"
#include "support.hpp"

using namespace elastica;

TEST_CASE("weighted-area solve reproduces the catenary") {
  const PlanarCurve c = solve_singular({1.0, 0.0}, {}, 2.0, {});
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    worst = std::max(worst, std::abs(c.z()[i] - std::cosh(c.x()[i])));
  CHECK(worst <= 1e-8);
  // arc-length closed form z = sqrt(1+s^2)
  for (std::size_t i = 0; i < c.size(); i += 100)
    CHECK(c.z()[i] == doctest::Approx(std::sqrt(1.0 + c.s()[i] * c.s()[i])).epsilon(1e-10));
}

TEST_CASE("weighted-area solve reproduces the parabola") {
  InitialData init;
  init.z0 = 0.25;
  StepControl control;
  control.h = 2.5e-4;  // the apex curvature is 2; theta''' peaks near 24
  const PlanarCurve c = solve_singular({0.5, 0.0}, init, 1.5, control);
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    worst = std::max(worst, std::abs(c.z()[i] - (c.x()[i] * c.x()[i] + 0.25)));
  CHECK(worst <= 1e-8);
}

TEST_CASE("height guard trips on a descending start") {
  InitialData init;
  init.z0 = 0.01;
  init.theta0 = -fixtures::kPi / 2.0;
  try {
    solve_singular({1.0, 0.0}, init, 1.0, {});
    FAIL("expected HeightVanished");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HeightVanished);
  }
}

TEST_CASE("potential solve reproduces the catenary") {
  const PlanarCurve c = solve_stationary({1.0, -2.0, 0.0}, {}, 2.0, {});
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    worst = std::max(worst, std::abs(c.z()[i] - std::cosh(c.x()[i])));
  CHECK(worst <= 1e-8);

  const FirstIntegralReport rep = first_integral_report({1.0, -2.0, 0.0}, c);
  CHECK(std::abs(rep.c_hat) <= 1e-10);
  CHECK(rep.drift <= 1e-9);
}

TEST_CASE("excluded potential parameters are rejected") {
  try {
    solve_stationary({0.0, 1.0, 0.0}, {}, 1.0, {});
    FAIL("expected ParamsExcluded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParamsExcluded);
  }
  CHECK_THROWS_AS(solve_stationary({1.0, 0.0, 0.0}, {}, 1.0, {}), Error);
  CHECK_THROWS_AS(solve_singular({0.0, 0.0}, {}, 1.0, {}), Error);
}

TEST_CASE("first integral is conserved on a long drop profile") {
  StepControl control;
  control.h = 5e-4;
  control.tol_geom = 2e-6;  // curvature reaches ~2.2 on this orbit
  const PlanarCurve c = solve_stationary({1.0, 1.0, 0.0}, {}, 5.0, control);
  const FirstIntegralReport rep = first_integral_report({1.0, 1.0, 0.0}, c);
  CHECK(rep.drift <= 1e-9);
}

TEST_CASE("first integral rejects m = -1") {
  const PlanarCurve c = fixtures::catenary_curve(0.0, 1.0, 1001);
  try {
    first_integral_report({1.0, -1.0, 0.0}, c);
    FAIL("expected MExcluded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MExcluded);
  }
}

TEST_CASE("curvature-energy solve holds the unit circle") {
  InitialData init;
  init.kappa0 = 1.0;
  init.kappa0p = 0.0;
  const PlanarCurve c = solve_elastic({2.0, 0.0, 1.0}, init, 3.0, {});
  for (std::size_t i = 0; i < c.size(); ++i)
    CHECK(std::abs(c.kappa()[i] - 1.0) <= 1e-12);
}

TEST_CASE("curvature-energy solve reproduces the catenary curvature") {
  InitialData init;
  init.kappa0 = 1.0;
  init.kappa0p = 0.0;
  const PlanarCurve c = solve_elastic({0.5, 0.0, 0.0}, init, 2.0, {});
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    worst = std::max(worst, std::abs(c.kappa()[i] - 1.0 / (1.0 + c.s()[i] * c.s()[i])));
  CHECK(worst <= 1e-7);
}

TEST_CASE("degenerate exponents are rejected") {
  try {
    solve_elastic({1.0, 0.0, 0.0}, {}, 1.0, {});
    FAIL("expected ExponentDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExponentDegenerate);
  }
  CHECK_THROWS_AS(solve_elastic({0.0, 0.0, 0.0}, {}, 1.0, {}), Error);
}

TEST_CASE("curvature-energy solve rejects out-of-domain starts") {
  InitialData init;
  init.kappa0 = -1.0;  // kappa < mu with fractional exponent
  CHECK_THROWS_AS(solve_elastic({0.5, 0.0, 0.0}, init, 1.0, {}), Error);
}

TEST_CASE("adaptive mode agrees with fixed mode") {
  StepControl adaptive;
  adaptive.mode = StepControl::Mode::Adaptive;
  adaptive.h = 1e-3;
  const PlanarCurve c = solve_stationary({1.0, -2.0, 0.0}, {}, 2.0, adaptive);
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    worst = std::max(worst, std::abs(c.z()[i] - std::cosh(c.x()[i])));
  CHECK(worst <= 1e-8);
  CHECK(first_integral_report({1.0, -2.0, 0.0}, c).drift <= 1e-9);
}

TEST_CASE("graph boundary problem recovers the catenary") {
  const double f_end = std::cosh(1.0);
  // this boundary data carries a second, shallower solution; aim at the
  // classical one
  ShootingControl shoot;
  shoot.slope_guess = -std::sinh(1.0);
  const GraphCurve g =
      solve_stationary_graph_bvp({1.0, -2.0, 0.0}, -1.0, 1.0, f_end, f_end, shoot);
  CHECK(std::abs(g.f.back() - f_end) <= 1e-10);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    worst = std::max(worst, std::abs(g.f[i] - std::cosh(g.x[i])));
  CHECK(worst <= 1e-8);

  const FirstIntegralReport rep = first_integral_report({1.0, -2.0, 0.0}, g);
  CHECK(std::abs(rep.c_hat) <= 1e-10);
  CHECK(rep.drift <= 1e-9);
}

TEST_CASE("graph boundary problem: constant-gravity drop shape") {
  const GraphCurve g = solve_stationary_graph_bvp({1.0, 1.0, 0.0}, -1.0, 1.0, 1.0, 1.0, {});
  CHECK(std::abs(g.f.back() - 1.0) <= 1e-10);
  CHECK(std::abs(g.fp[g.size() / 2]) <= 1e-8);  // symmetric, flat in the middle
  CHECK(graph_el_residual(g, {1.0, 1.0, 0.0}).linf <= 1e-8);
  // the profile sags below its boundary height
  CHECK(g.f[g.size() / 2] < 1.0);
}

TEST_CASE("impossible boundary data diverges") {
  try {
    solve_stationary_graph_bvp({1.0, -2.0, 0.0}, -1.0, 1.0, 0.05, 0.05, {});
    FAIL("expected failure");
  } catch (const Error& e) {
    const bool expected =
        e.code() == Errc::ShootingDiverged || e.code() == Errc::HeightVanished;
    CHECK(expected);
  }
}

TEST_CASE("arc-length re-solve matches the graph") {
  const StationaryParams st{1.0, 1.0, 0.0};
  const GraphCurve g = solve_stationary_graph_bvp(st, -1.0, 1.0, 1.0, 1.0, {});
  const PlanarCurve c = stationary_curve_from_graph(st, g, 4097);
  CHECK(c.x().front() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(c.x().back() - 1.0) <= 1e-9);
  CHECK(std::abs(c.z().back() - 1.0) <= 1e-9);
  CHECK(c.is_uniform());
}

TEST_CASE("fixed-step halving shrinks the terminal error fourth order") {
  auto terminal_error = [](double h) {
    StepControl c;
    c.h = h;
    c.tol_geom = 1e-3;  // consistency checks are O(h^2); only terminal state matters
    const PlanarCurve curve = solve_singular({1.0, 0.0}, {}, 2.0, c);
    const double xe = std::asinh(2.0), ze = std::sqrt(5.0), te = std::atan(2.0);
    return std::abs(curve.x().back() - xe) + std::abs(curve.z().back() - ze) +
           std::abs(curve.theta().back() - te);
  };
  const double r = terminal_error(0.02) / terminal_error(0.01);
  CHECK(r >= 14.0);
  CHECK(r <= 18.0);
}
