#pragma once

#include <cstddef>
#include <limits>

#include "elastica/curve.hpp"
#include "elastica/families.hpp"

namespace elastica {

/// Initial data for the arc-length initial-value solvers. kappa0/kappa0p are
/// used by the curvature-energy solver only.
struct InitialData {
  double x0 = 0.0;
  double z0 = 1.0;
  double theta0 = 0.0;
  double kappa0 = 1.0;
  double kappa0p = 0.0;
};

/// Step control shared by the solvers. Fixed mode is the default so fixtures
/// are bit-stable across runs; adaptive mode uses an embedded 5(4) pair with
/// h as the initial and maximum step (output stays dense enough to pass the
/// geometric validation).
struct StepControl {
  enum class Mode { Fixed, Adaptive };
  Mode mode = Mode::Fixed;
  double h = 1e-3;
  double rtol = 1e-10;
  double atol = 1e-12;
  double tol_geom = kDefaultGeomTol;
};

/// Height below which integration of families with z in a denominator or a
/// negative/fractional exponent is aborted (HeightVanished).
inline constexpr double kHeightGuard = 1e-8;

/// Generating curve of a weighted-area critical cylinder:
/// x' = cos(theta), z' = sin(theta), theta' = alpha*cos(theta)/z + varpi.
PlanarCurve solve_singular(const SingularParams& sp, const InitialData& init, double s_max,
                           const StepControl& control = {});

/// Generating curve of an area-plus-vertical-potential critical cylinder:
/// theta' = eta*z^m + lambda.
PlanarCurve solve_stationary(const StationaryParams& st, const InitialData& init, double s_max,
                             const StepControl& control = {});

/// Generating curve of a curvature-energy critical point, integrated as a
/// first-order system in (x, z, theta, v, v') with v = (kappa - mu)^(p-1).
PlanarCurve solve_elastic(const ElasticParams& ep, const InitialData& init, double s_max,
                          const StepControl& control = {});

struct ShootingControl {
  std::size_t grid_intervals = 4096;  ///< uniform x-grid resolution
  int max_iterations = 200;           ///< bisection + refinement budget
  double boundary_tol = 1e-12;        ///< target |f(x1) - f1|
  /// Starting slope for the bracketing search. The Dirichlet problem can
  /// carry several solutions; the search homes in on the root nearest the
  /// guess. NaN starts from the boundary chord slope.
  double slope_guess = std::numeric_limits<double>::quiet_NaN();
};

/// Dirichlet problem f'' = (eta f^m + lambda)(1 + f'^2)^(3/2), f(x0) = f0,
/// f(x1) = f1, solved by shooting on f'(x0): bracketing by doubling,
/// bisection, then derivative-based refinement of the boundary mismatch.
GraphCurve solve_stationary_graph_bvp(const StationaryParams& st, double x0, double x1, double f0,
                                      double f1, const ShootingControl& control = {});

/// Estimated constant and drift of the conserved quantity
/// -nu2 - eta z^(m+1)/(m+1) - lambda z along a stationary solution (m != -1).
struct FirstIntegralReport {
  double c_hat = 0.0;
  double drift = 0.0;
};
FirstIntegralReport first_integral_report(const StationaryParams& st, const PlanarCurve& curve);
FirstIntegralReport first_integral_report(const StationaryParams& st, const GraphCurve& g);

/// Arc length of a graph, by Simpson quadrature of sqrt(1 + fp^2).
double arc_length(const GraphCurve& g);

/// Re-integrates a stationary graph as an arc-length curve on a uniform
/// s-grid with `samples` nodes, starting from the graph's left endpoint.
/// Used to hand graphs to the stability machinery without interpolation.
PlanarCurve stationary_curve_from_graph(const StationaryParams& st, const GraphCurve& g,
                                        std::size_t samples, double tol_geom = kDefaultGeomTol);

}  // namespace elastica
