#pragma once

#include <cmath>
#include <variant>

#include "elastica/error.hpp"

namespace elastica {

/// Curvature-energy parameters: integrand (kappa - mu)^p + sigma against arc
/// length. sigma is the length multiplier and is free in the families mapped
/// from the weighted-area problem.
struct ElasticParams {
  double p = 2.0;
  double mu = 0.0;
  double sigma = 0.0;
};

/// Mean-curvature power energy on a hypersurface: (H - mu/n)^p + varsigma
/// against area. varsigma multiplies the area constraint.
struct WillmoreParams {
  int n = 1;
  double p = 2.0;
  double mu = 0.0;
  double varsigma = 0.0;
};

/// Height-weighted area: z^alpha against area plus varpi times the weighted
/// volume. alpha = 0 (constant mean curvature) is excluded.
struct SingularParams {
  double alpha = 1.0;
  double varpi = 0.0;
};

/// Area plus vertical potential: eta * z^m volume term and lambda times the
/// plain volume constraint. eta = 0 and m = 0 are excluded.
struct StationaryParams {
  double eta = 1.0;
  double m = 1.0;
  double lambda = 0.0;
};

// ---------------------------------------------------------------------------
// Lagrangian densities P(kappa) with hand-coded derivatives.

struct PowerLagrangian {
  double p;
  double mu;
  double sigma;
};

/// P = exp(mu * kappa); arises from the alpha = -1 weighted-area case.
struct ExpLagrangian {
  double mu;
};

/// P = log(kappa - lambda) + sigma; arises from the m = -1 potential case.
struct LogLagrangian {
  double lambda;
  double sigma;
};

using LagrangianKind = std::variant<PowerLagrangian, ExpLagrangian, LogLagrangian>;

struct LagrangianValues {
  double P;
  double Pdot;
  double Pddot;
};

inline bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

/// True when kappa is inside the variant's domain (fractional powers and the
/// logarithm need a positive base; negative integer powers need a nonzero one).
bool lagrangian_in_domain(const LagrangianKind& kind, double kappa);

/// Value and first/second kappa-derivatives of P. Throws DomainViolation
/// outside the variant's domain.
LagrangianValues lagrangian_eval(const LagrangianKind& kind, double kappa);

// ---------------------------------------------------------------------------
// Parameter maps between the families.

/// (p, mu) carry over unchanged; sigma = n^p * varsigma.
ElasticParams willmore_to_elastic(const WillmoreParams& wp);

/// alpha != -1: Power{p = alpha/(alpha+1), mu = varpi/(alpha+1), sigma = 0}.
/// alpha == -1: Exp{mu = 1/varpi} (varpi must be nonzero).
LagrangianKind singular_to_elastic(const SingularParams& sp);

/// m != -1: Power{p = (m+1)/m, mu = lambda, sigma} with sigma caller-supplied
/// (it is a free constant of integration). m == -1: Log{lambda, sigma}.
LagrangianKind stationary_to_elastic(const StationaryParams& st, double sigma);

/// Partial map: m = -alpha - 1 and lambda = varpi/(alpha+1); eta is left
/// unfixed and must be estimated per curve (see residuals::fit_eta).
struct PartialStationary {
  double m;
  double lambda;
};
PartialStationary singular_to_stationary(const SingularParams& sp);

/// Residual of the first-order ODE that P must satisfy for the weighted-area
/// reduction: (alpha+1)*kappa*Pdot - varpi*Pdot - alpha*P. Vanishes exactly
/// when kind = singular_to_elastic(sp).
double singular_lagrangian_ode_residual(const SingularParams& sp, const LagrangianKind& kind,
                                        double kappa);

}  // namespace elastica
