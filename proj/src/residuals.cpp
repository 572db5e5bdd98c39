#include "elastica/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "elastica/kernels.hpp"
#include "elastica/quadrature.hpp"

namespace elastica {

namespace {

void finish_norms(ResidualReport& rep) {
  KahanSum sq;
  for (double v : rep.values) {
    rep.linf = std::max(rep.linf, std::abs(v));
    sq.add(v * v);
  }
  rep.n_interior = rep.values.size();
  rep.l2 = rep.values.empty() ? 0.0
                              : std::sqrt(sq.value() / static_cast<double>(rep.values.size()));
}

void require_positive_height(std::span<const double> z) {
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!(z[i] > 0.0))
      fail(Errc::HeightNonpositive, "height must be positive at sample " + std::to_string(i));
}

void require_in_domain(const LagrangianKind& kind, std::span<const double> kappa) {
  for (std::size_t i = 0; i < kappa.size(); ++i)
    if (!lagrangian_in_domain(kind, kappa[i]))
      fail(Errc::DomainViolation,
           "curvature outside the Lagrangian domain at sample " + std::to_string(i));
}

// Shared core: resample, evaluate P/Pdot, apply the interior stencil, then
// drop the outermost stencil sample on each side from the report window.
ResidualReport elastic_residual_core(const PlanarCurve& curve, const LagrangianKind& kind,
                                     double h) {
  const PlanarCurve uni = resample_uniform(curve, h);
  const auto kappa = uni.kappa();
  const auto s = uni.s();
  const std::size_t n = kappa.size();
  require_in_domain(kind, kappa);

  std::vector<double> P(n), Pdot(n), r(n - 2);
  kernels::lagrangian_map(kind, kappa, P, Pdot);
  kernels::elastic_residual_map(kappa, P, Pdot, uni.mean_spacing(), r);

  ResidualReport rep;
  if (r.size() > 2) {
    rep.values.assign(r.begin() + 1, r.end() - 1);
    rep.s.assign(s.begin() + 2, s.end() - 2);
  }
  finish_norms(rep);
  return rep;
}

}  // namespace

ResidualReport singular_el_residual(const PlanarCurve& curve, const SingularParams& sp) {
  require_positive_height(curve.z());
  ResidualReport rep;
  rep.s.assign(curve.s().begin(), curve.s().end());
  rep.values.resize(curve.size());
  kernels::singular_residual_map(curve.kappa(), curve.nu2(), curve.z(), sp.alpha, sp.varpi,
                                 rep.values);
  finish_norms(rep);
  return rep;
}

ResidualReport stationary_el_residual(const PlanarCurve& curve, const StationaryParams& st) {
  if (st.m < 0.0 || !is_integer(st.m)) require_positive_height(curve.z());
  ResidualReport rep;
  rep.s.assign(curve.s().begin(), curve.s().end());
  rep.values.resize(curve.size());
  kernels::stationary_residual_map(curve.kappa(), curve.z(), st.eta, st.m, st.lambda, rep.values);
  finish_norms(rep);
  return rep;
}

ResidualReport elastic_el_residual(const PlanarCurve& curve, const LagrangianKind& kind, double h) {
  return elastic_residual_core(curve, kind, h);
}

ResidualReport willmore_cyl_residual(const PlanarCurve& curve, const WillmoreParams& wp, double h) {
  const ElasticParams ep = willmore_to_elastic(wp);
  return elastic_el_residual(curve, PowerLagrangian{ep.p, ep.mu, ep.sigma}, h);
}

SigmaFit fit_sigma_kind(const PlanarCurve& curve, const LagrangianKind& kind, double h) {
  if (std::holds_alternative<ExpLagrangian>(kind))
    fail(Errc::InvalidArgument, "the exp density carries no length multiplier");

  LagrangianKind base_kind = kind;
  if (auto* pl = std::get_if<PowerLagrangian>(&base_kind)) pl->sigma = 0.0;
  if (auto* ll = std::get_if<LogLagrangian>(&base_kind)) ll->sigma = 0.0;

  const PlanarCurve uni = resample_uniform(curve, h);
  const ResidualReport base = elastic_residual_core(uni, base_kind, h);

  // Interior kappa window matching the report (two samples trimmed per side).
  const auto kappa = uni.kappa();
  std::vector<double> kw(kappa.begin() + 2, kappa.end() - 2);

  KahanSum num, den;
  for (std::size_t i = 0; i < kw.size(); ++i) {
    num.add(base.values[i] * kw[i]);
    den.add(kw[i] * kw[i]);
  }
  if (den.value() < 1e-12)
    fail(Errc::DegenerateFit, "curvature is too close to zero to recover sigma");

  SigmaFit fit;
  fit.sigma_hat = num.value() / den.value();
  fit.report.s = base.s;
  fit.report.values.resize(base.values.size());
  for (std::size_t i = 0; i < kw.size(); ++i)
    fit.report.values[i] = base.values[i] - fit.sigma_hat * kw[i];
  finish_norms(fit.report);

  fit.sigma_samples.reserve(kw.size());
  for (std::size_t i = 0; i < kw.size(); ++i)
    if (std::abs(kw[i]) > 1e-8) fit.sigma_samples.push_back(base.values[i] / kw[i]);
  return fit;
}

SigmaFit fit_sigma(const PlanarCurve& curve, double p, double mu, double h) {
  return fit_sigma_kind(curve, PowerLagrangian{p, mu, 0.0}, h);
}

EtaFit fit_eta(const PlanarCurve& curve, double m, double lambda) {
  const auto z = curve.z();
  const auto kappa = curve.kappa();
  if (m < 0.0 || !is_integer(m)) require_positive_height(z);

  KahanSum num, den;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double zm = std::pow(z[i], m);
    num.add((kappa[i] - lambda) * zm);
    den.add(zm * zm);
  }
  if (den.value() < 1e-12) fail(Errc::DegenerateFit, "z^m vanishes; eta is unidentifiable");

  // A curve with constant height cannot separate eta z^m from lambda.
  const auto [zmin, zmax] = std::minmax_element(z.begin(), z.end());
  if (*zmax - *zmin < 1e-12 * std::max(1.0, std::abs(*zmax)))
    fail(Errc::DegenerateFit, "height is constant; eta is unidentifiable");

  EtaFit fit;
  fit.eta_hat = num.value() / den.value();
  fit.report.s.assign(curve.s().begin(), curve.s().end());
  fit.report.values.resize(z.size());
  kernels::stationary_residual_map(kappa, z, fit.eta_hat, m, lambda, fit.report.values);
  finish_norms(fit.report);
  return fit;
}

ResidualReport graph_el_residual(const GraphCurve& g, const StationaryParams& st) {
  check_graph(g);
  if (st.m < 0.0 || !is_integer(st.m)) require_positive_height(g.f);

  const std::size_t n = g.size();
  std::vector<double> fpp(n);
  kernels::derivative4_map(g.fp, g.spacing(), fpp);

  ResidualReport rep;
  rep.s = g.x;
  rep.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double slope2 = 1.0 + g.fp[i] * g.fp[i];
    rep.values[i] = fpp[i] - (st.eta * std::pow(g.f[i], st.m) + st.lambda) * slope2 *
                                 std::sqrt(slope2);
  }
  finish_norms(rep);
  return rep;
}

}  // namespace elastica
