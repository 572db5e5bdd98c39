#include "elastica/families.hpp"

#include <cmath>

namespace elastica {

namespace {

LagrangianValues eval_power(const PowerLagrangian& pl, double kappa) {
  const double base = kappa - pl.mu;
  const double p = pl.p;
  LagrangianValues v{};
  v.P = std::pow(base, p) + pl.sigma;
  // Zero coefficients short-circuit so p in {0, 1} does not produce 0 * inf.
  v.Pdot = (p == 0.0) ? 0.0 : p * std::pow(base, p - 1.0);
  const double c2 = p * (p - 1.0);
  v.Pddot = (c2 == 0.0) ? 0.0 : c2 * std::pow(base, p - 2.0);
  return v;
}

}  // namespace

bool lagrangian_in_domain(const LagrangianKind& kind, double kappa) {
  if (const auto* pl = std::get_if<PowerLagrangian>(&kind)) {
    const double base = kappa - pl->mu;
    if (!is_integer(pl->p)) return base > 0.0;
    if (pl->p < 2.0 && pl->p != 0.0 && pl->p != 1.0) return base != 0.0;
    return true;
  }
  if (std::holds_alternative<ExpLagrangian>(kind)) return true;
  const auto& ll = std::get<LogLagrangian>(kind);
  return kappa - ll.lambda > 0.0;
}

LagrangianValues lagrangian_eval(const LagrangianKind& kind, double kappa) {
  if (!lagrangian_in_domain(kind, kappa))
    fail(Errc::DomainViolation, "kappa outside the Lagrangian domain");
  if (const auto* pl = std::get_if<PowerLagrangian>(&kind)) return eval_power(*pl, kappa);
  if (const auto* el = std::get_if<ExpLagrangian>(&kind)) {
    const double e = std::exp(el->mu * kappa);
    return {e, el->mu * e, el->mu * el->mu * e};
  }
  const auto& ll = std::get<LogLagrangian>(kind);
  const double inv = 1.0 / (kappa - ll.lambda);
  return {std::log(kappa - ll.lambda) + ll.sigma, inv, -inv * inv};
}

ElasticParams willmore_to_elastic(const WillmoreParams& wp) {
  if (wp.n < 1) fail(Errc::InvalidArgument, "dimension parameter n must be >= 1");
  return {wp.p, wp.mu, std::pow(static_cast<double>(wp.n), wp.p) * wp.varsigma};
}

LagrangianKind singular_to_elastic(const SingularParams& sp) {
  if (sp.alpha == 0.0) fail(Errc::AlphaExcluded, "alpha = 0 gives constant mean curvature");
  if (sp.alpha == -1.0) {
    if (sp.varpi == 0.0)
      fail(Errc::ExpRequiresNonzeroVarpi, "alpha = -1 needs varpi != 0 for the exp density");
    return ExpLagrangian{1.0 / sp.varpi};
  }
  return PowerLagrangian{sp.alpha / (sp.alpha + 1.0), sp.varpi / (sp.alpha + 1.0), 0.0};
}

LagrangianKind stationary_to_elastic(const StationaryParams& st, double sigma) {
  if (st.m == 0.0) fail(Errc::ParamsExcluded, "m = 0 gives constant mean curvature");
  if (st.m == -1.0) return LogLagrangian{st.lambda, sigma};
  return PowerLagrangian{(st.m + 1.0) / st.m, st.lambda, sigma};
}

PartialStationary singular_to_stationary(const SingularParams& sp) {
  if (sp.alpha == 0.0 || sp.alpha == -1.0)
    fail(Errc::AlphaExcluded, "map defined for alpha outside {0, -1}");
  return {-sp.alpha - 1.0, sp.varpi / (sp.alpha + 1.0)};
}

double singular_lagrangian_ode_residual(const SingularParams& sp, const LagrangianKind& kind,
                                        double kappa) {
  const LagrangianValues v = lagrangian_eval(kind, kappa);
  return (sp.alpha + 1.0) * kappa * v.Pdot - sp.varpi * v.Pdot - sp.alpha * v.P;
}

}  // namespace elastica
