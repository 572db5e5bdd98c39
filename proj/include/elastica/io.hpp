#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "elastica/curve.hpp"
#include "elastica/energies.hpp"
#include "elastica/families.hpp"
#include "elastica/residuals.hpp"
#include "elastica/solvers.hpp"
#include "elastica/stability.hpp"

namespace elastica {

using json = nlohmann::json;

using FamilyParams = std::variant<ElasticParams, WillmoreParams, SingularParams, StationaryParams>;

/// Curve CSV: header `s,x,z,theta,kappa`, one record per line, 17 significant
/// digits, LF endings. Graph CSV: header `x,f,fp`.
void write_curve_csv(const std::string& path, const PlanarCurve& curve);
RawCurveSamples read_curve_csv(const std::string& path);

void write_graph_csv(const std::string& path, const GraphCurve& g);
GraphCurve read_graph_csv(const std::string& path);

/// Family parameter records carry an explicit `family` tag, e.g.
/// {"family":"singular","alpha":1.0,"varpi":0.0}.
json params_to_json(const FamilyParams& params);
FamilyParams params_from_json(const json& j);

/// Lagrangian records carry a `kind` tag (power / exp / log).
json kind_to_json(const LagrangianKind& kind);
LagrangianKind kind_from_json(const json& j);

json residual_report_to_json(const ResidualReport& rep, bool include_samples = false);
json energy_to_json(const EnergyValue& e);
json first_integral_to_json(const FirstIntegralReport& rep);
json stability_report_to_json(const StabilityReport& rep);
json minimizer_comparison_to_json(const MinimizerComparison& cmp);
json flux_identity_to_json(const FluxIdentity& fi, const ClosureCheck& cc);

/// Writes an axis-equal SVG polyline of the curve (presentation only).
void write_curve_svg(const std::string& path, const PlanarCurve& curve);

}  // namespace elastica
