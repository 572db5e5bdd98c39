#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/families.hpp"

namespace elastica {

/// Quadrature value of a functional with its additive breakdown; the parts
/// sum to total up to rounding. `note` carries normalization metadata.
struct EnergyValue {
  double total = 0.0;
  std::vector<std::pair<std::string, double>> parts;
  std::string note;
};

/// Integral of P(kappa) over arc length by composite Simpson; non-uniform
/// curves are resampled to their mean spacing first.
EnergyValue elastic_energy(const PlanarCurve& curve, const LagrangianKind& kind);

/// Willmore-type value of the cylinder over the curve, per unit ruling
/// measure: n^-p times the curvature energy with sigma = n^p * varsigma.
EnergyValue cylinder_willmore_energy(const PlanarCurve& curve, const WillmoreParams& wp);

/// Area plus vertical potential of a graph: int sqrt(1+fp^2) dx
/// + eta * int f^(m+1)/(m+1) dx + lambda * int f dx (fiber-integrated
/// volume terms). m = -1 is rejected.
EnergyValue graph_potential_energy(const GraphCurve& g, const StationaryParams& st);

/// Height-weighted area of a graph: int f^alpha sqrt(1+fp^2) dx
/// + varpi * int f^(alpha+1)/(alpha+1) dx. The volume term diverges for
/// alpha <= -1 and is rejected when varpi != 0.
EnergyValue weighted_area_energy(const GraphCurve& g, const SingularParams& sp);

/// Flux identity for a closed curve: lhs = loop integral of eta z^m nu2 ds,
/// rhs = the enclosed-area integral m eta int z^(m-1) dA evaluated through
/// the independent boundary reduction -m eta * loop integral of x z^(m-1) z' ds.
struct FluxIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};
FluxIdentity closed_flux_identity(const PlanarCurve& curve, double eta, double m);

/// Loop integrals of nu2 and kappa*nu2, which are exact derivatives of
/// periodic quantities and must vanish on closed curves.
struct ClosureCheck {
  double int_nu2 = 0.0;
  double int_kappa_nu2 = 0.0;
};
ClosureCheck tangential_closure_check(const PlanarCurve& curve);

}  // namespace elastica
