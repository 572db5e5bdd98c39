#pragma once

#include <span>

#include "elastica/families.hpp"

namespace elastica::kernels {

/// Arrays below this size are processed serially even when OpenMP is enabled;
/// per-element work is tiny and thread startup would dominate.
inline constexpr std::size_t kOmpGrain = 16384;

// Each kernel writes every output element from the matching input elements
// only, so the OpenMP versions produce bit-identical results to the *_ref
// serial twins regardless of thread count. The *_ref twins are the reference
// implementations used by the unit tests and the benchmark.

/// P and Pdot of the Lagrangian at every kappa sample. Callers must have
/// checked the domain first (see lagrangian_in_domain).
void lagrangian_map(const LagrangianKind& kind, std::span<const double> kappa,
                    std::span<double> P, std::span<double> Pdot);
void lagrangian_map_ref(const LagrangianKind& kind, std::span<const double> kappa,
                        std::span<double> P, std::span<double> Pdot);

/// r[i] = kappa[i] - alpha * nu2[i] / z[i] - varpi
void singular_residual_map(std::span<const double> kappa, std::span<const double> nu2,
                           std::span<const double> z, double alpha, double varpi,
                           std::span<double> r);
void singular_residual_map_ref(std::span<const double> kappa, std::span<const double> nu2,
                               std::span<const double> z, double alpha, double varpi,
                               std::span<double> r);

/// r[i] = kappa[i] - eta * z[i]^m - lambda
void stationary_residual_map(std::span<const double> kappa, std::span<const double> z, double eta,
                             double m, double lambda, std::span<double> r);
void stationary_residual_map_ref(std::span<const double> kappa, std::span<const double> z,
                                 double eta, double m, double lambda, std::span<double> r);

/// out[i-1] = (f[i-1] - 2 f[i] + f[i+1]) / h^2 for i = 1..n-2; out has n-2 slots.
void second_difference_map(std::span<const double> f, double h, std::span<double> out);
void second_difference_map_ref(std::span<const double> f, double h, std::span<double> out);

/// Interior residual of the curvature-energy equation on a uniform grid:
/// r[i-1] = (Pdot[i-1] - 2 Pdot[i] + Pdot[i+1])/h^2 + kappa[i]^2 Pdot[i]
///          - kappa[i] P[i],  i = 1..n-2.
void elastic_residual_map(std::span<const double> kappa, std::span<const double> P,
                          std::span<const double> Pdot, double h, std::span<double> r);
void elastic_residual_map_ref(std::span<const double> kappa, std::span<const double> P,
                              std::span<const double> Pdot, double h, std::span<double> r);

/// Fourth-order first derivative on a uniform grid: 5-point central stencil
/// with biased stencils at the two nodes nearest each boundary. f.size() >= 5.
void derivative4_map(std::span<const double> f, double h, std::span<double> out);
void derivative4_map_ref(std::span<const double> f, double h, std::span<double> out);

/// q[i] = kappa[i]^2 - m * eta * z[i]^(m-1) * nu2[i]
void jacobi_potential_map(std::span<const double> kappa, std::span<const double> z,
                          std::span<const double> nu2, double eta, double m, std::span<double> q);
void jacobi_potential_map_ref(std::span<const double> kappa, std::span<const double> z,
                              std::span<const double> nu2, double eta, double m,
                              std::span<double> q);

}  // namespace elastica::kernels
