#pragma once

#include <vector>

#include "elastica/curve.hpp"
#include "elastica/families.hpp"

namespace elastica {

/// Per-sample residual values of an equilibrium equation plus norms.
/// values[k] is the residual at arc length s[k]; linf is the max magnitude
/// and l2 the root-mean-square over the same window.
struct ResidualReport {
  std::vector<double> s;
  std::vector<double> values;
  double linf = 0.0;
  double l2 = 0.0;
  std::size_t n_interior = 0;
};

/// kappa - alpha * nu2 / z - varpi, evaluated algebraically at every sample.
ResidualReport singular_el_residual(const PlanarCurve& curve, const SingularParams& sp);

/// kappa - eta * z^m - lambda, evaluated algebraically at every sample.
ResidualReport stationary_el_residual(const PlanarCurve& curve, const StationaryParams& st);

/// Fourth-order equilibrium residual d^2/ds^2[Pdot] + kappa^2 Pdot - kappa P
/// with the second derivative taken by 3-point central differences after
/// resampling to uniform spacing h. The two samples nearest each boundary are
/// excluded from the report.
ResidualReport elastic_el_residual(const PlanarCurve& curve, const LagrangianKind& kind, double h);

/// Delegates to elastic_el_residual with the mapped parameters.
ResidualReport willmore_cyl_residual(const PlanarCurve& curve, const WillmoreParams& wp, double h);

/// Least-squares recovery of the free length multiplier sigma for the Power
/// density with the given (p, mu): the residual is affine in sigma with
/// coefficient -kappa. sigma_samples holds the per-sample estimates
/// base_k / kappa_k used for dispersion diagnostics.
struct SigmaFit {
  double sigma_hat = 0.0;
  ResidualReport report;               ///< residual at sigma_hat
  std::vector<double> sigma_samples;   ///< per-sample estimates (|kappa| > 1e-8 only)
};
SigmaFit fit_sigma(const PlanarCurve& curve, double p, double mu, double h = 1e-3);

/// Same recovery for any sigma-bearing density (Power or Log).
SigmaFit fit_sigma_kind(const PlanarCurve& curve, const LagrangianKind& kind, double h = 1e-3);

/// Least-squares recovery of eta in kappa = eta z^m + lambda.
struct EtaFit {
  double eta_hat = 0.0;
  ResidualReport report;  ///< residual of kappa - eta_hat z^m - lambda
};
EtaFit fit_eta(const PlanarCurve& curve, double m, double lambda);

/// Equilibrium residual of a graph, f'' - (eta f^m + lambda)(1 + f'^2)^(3/2),
/// with f'' from a fourth-order stencil applied to the stored slopes.
ResidualReport graph_el_residual(const GraphCurve& g, const StationaryParams& st);

}  // namespace elastica
