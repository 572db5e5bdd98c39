#include "elastica/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace elastica::kernels {

namespace {

// Power evaluation used inside the hot loops; the variant dispatch happens
// once per kernel call, not per element.
struct PowerEval {
  double p, mu, sigma;
  void operator()(double kappa, double& P, double& Pdot) const {
    const double base = kappa - mu;
    P = std::pow(base, p) + sigma;
    Pdot = (p == 0.0) ? 0.0 : p * std::pow(base, p - 1.0);
  }
};

struct ExpEval {
  double mu;
  void operator()(double kappa, double& P, double& Pdot) const {
    P = std::exp(mu * kappa);
    Pdot = mu * P;
  }
};

struct LogEval {
  double lambda, sigma;
  void operator()(double kappa, double& P, double& Pdot) const {
    P = std::log(kappa - lambda) + sigma;
    Pdot = 1.0 / (kappa - lambda);
  }
};

template <class Eval>
void lagrangian_loop_omp(const Eval& eval, std::span<const double> kappa, std::span<double> P,
                         std::span<double> Pdot) {
  const std::int64_t n = static_cast<std::int64_t>(kappa.size());
#pragma omp parallel for if (n >= static_cast<std::int64_t>(kOmpGrain))
  for (std::int64_t i = 0; i < n; ++i) eval(kappa[i], P[i], Pdot[i]);
}

template <class Eval>
void lagrangian_loop_ref(const Eval& eval, std::span<const double> kappa, std::span<double> P,
                         std::span<double> Pdot) {
  for (std::size_t i = 0; i < kappa.size(); ++i) eval(kappa[i], P[i], Pdot[i]);
}

}  // namespace

void lagrangian_map(const LagrangianKind& kind, std::span<const double> kappa, std::span<double> P,
                    std::span<double> Pdot) {
  if (const auto* pl = std::get_if<PowerLagrangian>(&kind))
    lagrangian_loop_omp(PowerEval{pl->p, pl->mu, pl->sigma}, kappa, P, Pdot);
  else if (const auto* el = std::get_if<ExpLagrangian>(&kind))
    lagrangian_loop_omp(ExpEval{el->mu}, kappa, P, Pdot);
  else {
    const auto& ll = std::get<LogLagrangian>(kind);
    lagrangian_loop_omp(LogEval{ll.lambda, ll.sigma}, kappa, P, Pdot);
  }
}

void lagrangian_map_ref(const LagrangianKind& kind, std::span<const double> kappa,
                        std::span<double> P, std::span<double> Pdot) {
  if (const auto* pl = std::get_if<PowerLagrangian>(&kind))
    lagrangian_loop_ref(PowerEval{pl->p, pl->mu, pl->sigma}, kappa, P, Pdot);
  else if (const auto* el = std::get_if<ExpLagrangian>(&kind))
    lagrangian_loop_ref(ExpEval{el->mu}, kappa, P, Pdot);
  else {
    const auto& ll = std::get<LogLagrangian>(kind);
    lagrangian_loop_ref(LogEval{ll.lambda, ll.sigma}, kappa, P, Pdot);
  }
}

void singular_residual_map(std::span<const double> kappa, std::span<const double> nu2,
                           std::span<const double> z, double alpha, double varpi,
                           std::span<double> r) {
  const std::int64_t n = static_cast<std::int64_t>(kappa.size());
#pragma omp parallel for if (n >= static_cast<std::int64_t>(kOmpGrain))
  for (std::int64_t i = 0; i < n; ++i) r[i] = kappa[i] - alpha * nu2[i] / z[i] - varpi;
}

void singular_residual_map_ref(std::span<const double> kappa, std::span<const double> nu2,
                               std::span<const double> z, double alpha, double varpi,
                               std::span<double> r) {
  for (std::size_t i = 0; i < kappa.size(); ++i) r[i] = kappa[i] - alpha * nu2[i] / z[i] - varpi;
}

void stationary_residual_map(std::span<const double> kappa, std::span<const double> z, double eta,
                             double m, double lambda, std::span<double> r) {
  const std::int64_t n = static_cast<std::int64_t>(kappa.size());
#pragma omp parallel for if (n >= static_cast<std::int64_t>(kOmpGrain))
  for (std::int64_t i = 0; i < n; ++i) r[i] = kappa[i] - eta * std::pow(z[i], m) - lambda;
}

void stationary_residual_map_ref(std::span<const double> kappa, std::span<const double> z,
                                 double eta, double m, double lambda, std::span<double> r) {
  for (std::size_t i = 0; i < kappa.size(); ++i)
    r[i] = kappa[i] - eta * std::pow(z[i], m) - lambda;
}

void second_difference_map(std::span<const double> f, double h, std::span<double> out) {
  const std::int64_t n = static_cast<std::int64_t>(f.size());
  const double inv_h2 = 1.0 / (h * h);
#pragma omp parallel for if (n >= static_cast<std::int64_t>(kOmpGrain))
  for (std::int64_t i = 1; i < n - 1; ++i) out[i - 1] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * inv_h2;
}

void second_difference_map_ref(std::span<const double> f, double h, std::span<double> out) {
  const double inv_h2 = 1.0 / (h * h);
  for (std::size_t i = 1; i + 1 < f.size(); ++i)
    out[i - 1] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * inv_h2;
}

void elastic_residual_map(std::span<const double> kappa, std::span<const double> P,
                          std::span<const double> Pdot, double h, std::span<double> r) {
  const std::int64_t n = static_cast<std::int64_t>(kappa.size());
  const double inv_h2 = 1.0 / (h * h);
#pragma omp parallel for if (n >= static_cast<std::int64_t>(kOmpGrain))
  for (std::int64_t i = 1; i < n - 1; ++i) {
    const double dd = (Pdot[i - 1] - 2.0 * Pdot[i] + Pdot[i + 1]) * inv_h2;
    r[i - 1] = dd + kappa[i] * kappa[i] * Pdot[i] - kappa[i] * P[i];
  }
}

void elastic_residual_map_ref(std::span<const double> kappa, std::span<const double> P,
                              std::span<const double> Pdot, double h, std::span<double> r) {
  const double inv_h2 = 1.0 / (h * h);
  for (std::size_t i = 1; i + 1 < kappa.size(); ++i) {
    const double dd = (Pdot[i - 1] - 2.0 * Pdot[i] + Pdot[i + 1]) * inv_h2;
    r[i - 1] = dd + kappa[i] * kappa[i] * Pdot[i] - kappa[i] * P[i];
  }
}

void derivative4_map(std::span<const double> f, double h, std::span<double> out) {
  const std::int64_t n = static_cast<std::int64_t>(f.size());
  const double c = 1.0 / (12.0 * h);
  out[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  out[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
#pragma omp parallel for if (n >= static_cast<std::int64_t>(kOmpGrain))
  for (std::int64_t i = 2; i < n - 2; ++i)
    out[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  out[n - 2] =
      -c * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
  out[n - 1] =
      -c * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
}

void derivative4_map_ref(std::span<const double> f, double h, std::span<double> out) {
  const std::size_t n = f.size();
  const double c = 1.0 / (12.0 * h);
  out[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  out[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  for (std::size_t i = 2; i + 2 < n; ++i)
    out[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  out[n - 2] =
      -c * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
  out[n - 1] =
      -c * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
}

void jacobi_potential_map(std::span<const double> kappa, std::span<const double> z,
                          std::span<const double> nu2, double eta, double m, std::span<double> q) {
  const std::int64_t n = static_cast<std::int64_t>(kappa.size());
  const double me = m * eta;
#pragma omp parallel for if (n >= static_cast<std::int64_t>(kOmpGrain))
  for (std::int64_t i = 0; i < n; ++i)
    q[i] = kappa[i] * kappa[i] - me * std::pow(z[i], m - 1.0) * nu2[i];
}

void jacobi_potential_map_ref(std::span<const double> kappa, std::span<const double> z,
                              std::span<const double> nu2, double eta, double m,
                              std::span<double> q) {
  const double me = m * eta;
  for (std::size_t i = 0; i < kappa.size(); ++i)
    q[i] = kappa[i] * kappa[i] - me * std::pow(z[i], m - 1.0) * nu2[i];
}

}  // namespace elastica::kernels
