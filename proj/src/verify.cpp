#include "elastica/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "elastica/io.hpp"
#include "elastica/residuals.hpp"
#include "elastica/rng.hpp"
#include "elastica/solvers.hpp"

namespace elastica {

namespace {

constexpr double kElasticTol = 1e-5;
constexpr double kCvTol = 1e-3;
constexpr double kEtaTol = 1e-8;

struct SingularDraw {
  SingularParams sp;
  InitialData init;
  double s_max = 0.5;
};

// Two regimes, both keeping the mapped Power density comfortably inside its
// domain along the whole arc (kappa - mu bounded away from zero).
SingularDraw draw_singular(Lcg64& rng) {
  SingularDraw d;
  if (rng.next_double() < 0.5) {
    d.sp.alpha = rng.uniform(0.4, 1.6);
    d.sp.varpi = rng.uniform(0.0, 0.3);
    d.init.z0 = rng.uniform(1.0, 1.4);
    d.s_max = 0.5;
  } else {
    d.sp.alpha = rng.uniform(-0.62, -0.5);
    d.sp.varpi = rng.uniform(-2.0, -1.6);
    d.init.z0 = rng.uniform(1.1, 1.4);
    d.s_max = 0.3;
  }
  return d;
}

struct StationaryDraw {
  StationaryParams st;
  InitialData init;
  double s_max = 0.35;
};

// Rejects draws whose conserved constant c is near zero: the recovered length
// multiplier is proportional to c and the dispersion diagnostic needs it
// bounded away from zero.
StationaryDraw draw_stationary(Lcg64& rng) {
  StationaryDraw d;
  for (int attempt = 0; attempt < 100; ++attempt) {
    d.st.m = (rng.next_double() < 0.5) ? rng.uniform(0.4, 1.6) : rng.uniform(-2.2, -1.3);
    d.st.eta = rng.uniform(0.6, 1.0);
    d.st.lambda = rng.uniform(0.0, 0.2);
    d.init.z0 = rng.uniform(0.85, 1.05);
    const double c = -1.0 - d.st.eta * std::pow(d.init.z0, d.st.m + 1.0) / (d.st.m + 1.0) -
                     d.st.lambda * d.init.z0;
    if (std::abs(c) >= 0.25) return d;
  }
  d.st = {1.0, 1.0, 0.0};
  d.init = {};
  return d;
}

double coefficient_of_variation(const std::vector<double>& xs) {
  if (xs.empty()) return std::numeric_limits<double>::infinity();
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  if (std::abs(mean) < 1e-300) return std::numeric_limits<double>::infinity();
  return std::sqrt(var) / std::abs(mean);
}

struct CaseResult {
  json doc;
  bool pass = false;
  double linf = std::numeric_limits<double>::infinity();
};

template <class Fn>
std::vector<CaseResult> run_cases(std::size_t n, const Fn& body) {
  std::vector<CaseResult> results(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      results[i] = body(static_cast<std::size_t>(i));
    } catch (const std::exception& e) {
      results[i].doc["error"] = e.what();
      results[i].pass = false;
    }
  }
  return results;
}

json section_json(const std::vector<CaseResult>& cases, bool& section_pass) {
  json arr = json::array();
  double worst = 0.0;
  bool pass = true;
  for (const auto& c : cases) {
    arr.push_back(c.doc);
    pass = pass && c.pass;
    if (std::isfinite(c.linf)) worst = std::max(worst, c.linf);
  }
  section_pass = pass;
  return {{"cases", arr}, {"worst_linf", worst}, {"pass", pass}};
}

}  // namespace

VerifyReport verify_relations(const VerifyConfig& config) {
  Lcg64 rng(config.seed);
  const auto n = static_cast<std::size_t>(std::max(0, config.cases));

  // All parameters are drawn up front so results are independent of the
  // parallel schedule.
  std::vector<SingularDraw> sing(n), sing_eta(n);
  std::vector<StationaryDraw> stat(n);
  for (auto& d : sing) d = draw_singular(rng);
  for (auto& d : stat) d = draw_stationary(rng);
  for (auto& d : sing_eta) d = draw_singular(rng);

  const double h = config.h;
  StepControl control;
  control.h = h;
  // The draws reach curvatures near 2.5 where the second-order consistency
  // stencil at h = 1e-3 sits above the default 1e-6; validate accordingly.
  control.tol_geom = 5e-6;

  // Weighted-area solves satisfy the mapped curvature-energy equation.
  auto weighted_cases = run_cases(n, [&](std::size_t i) {
    const auto& d = sing[i];
    CaseResult r;
    const PlanarCurve curve = solve_singular(d.sp, d.init, d.s_max, control);
    const LagrangianKind kind = singular_to_elastic(d.sp);
    const ResidualReport rep = elastic_el_residual(curve, kind, h);
    r.linf = rep.linf;
    r.pass = rep.linf <= kElasticTol;
    r.doc = {{"alpha", d.sp.alpha}, {"varpi", d.sp.varpi},     {"z0", d.init.z0},
             {"map", kind_to_json(kind)}, {"linf", rep.linf}, {"pass", r.pass}};
    return r;
  });

  // Special route: alpha = -1 maps to the exp density.
  {
    CaseResult r;
    try {
      const SingularParams sp{-1.0, 2.0};
      const InitialData init{};
      const PlanarCurve curve = solve_singular(sp, init, 0.5, control);
      const LagrangianKind kind = singular_to_elastic(sp);
      const ResidualReport rep = elastic_el_residual(curve, kind, h);
      r.linf = rep.linf;
      r.pass = rep.linf <= kElasticTol;
      r.doc = {{"alpha", sp.alpha}, {"varpi", sp.varpi},  {"z0", init.z0},
               {"map", kind_to_json(kind)}, {"linf", rep.linf}, {"pass", r.pass}};
    } catch (const std::exception& e) {
      r.doc["error"] = e.what();
    }
    weighted_cases.push_back(r);
  }

  // Potential solves satisfy the curvature-energy equation once the free
  // length multiplier is fitted; the per-sample estimates must agree.
  auto potential_cases = run_cases(n, [&](std::size_t i) {
    const auto& d = stat[i];
    CaseResult r;
    const PlanarCurve curve = solve_stationary(d.st, d.init, d.s_max, control);
    const double p = (d.st.m + 1.0) / d.st.m;
    const SigmaFit fit = fit_sigma(curve, p, d.st.lambda, h);
    const double cv = coefficient_of_variation(fit.sigma_samples);
    r.linf = fit.report.linf;
    r.pass = fit.report.linf <= kElasticTol && cv <= kCvTol;
    r.doc = {{"eta", d.st.eta},           {"m", d.st.m},       {"lambda", d.st.lambda},
             {"z0", d.init.z0},           {"p", p},            {"sigma_hat", fit.sigma_hat},
             {"sigma_cv", cv},            {"linf", fit.report.linf}, {"pass", r.pass}};
    return r;
  });

  // Special route: m = -1 maps to the log density.
  {
    CaseResult r;
    try {
      const StationaryParams st{1.0, -1.0, 0.0};
      const InitialData init{};
      const PlanarCurve curve = solve_stationary(st, init, 0.5, control);
      const SigmaFit fit = fit_sigma_kind(curve, LogLagrangian{st.lambda, 0.0}, h);
      r.linf = fit.report.linf;
      r.pass = fit.report.linf <= kElasticTol;
      r.doc = {{"eta", st.eta},
               {"m", st.m},
               {"lambda", st.lambda},
               {"map", kind_to_json(LagrangianKind{LogLagrangian{st.lambda, fit.sigma_hat}})},
               {"sigma_hat", fit.sigma_hat},
               {"linf", fit.report.linf},
               {"pass", r.pass}};
    } catch (const std::exception& e) {
      r.doc["error"] = e.what();
    }
    potential_cases.push_back(r);
  }

  // Weighted-area solves are stationary for the mapped (m, lambda) after
  // fitting the undetermined eta.
  auto bridge_cases = run_cases(n, [&](std::size_t i) {
    const auto& d = sing_eta[i];
    CaseResult r;
    const PlanarCurve curve = solve_singular(d.sp, d.init, d.s_max, control);
    const PartialStationary ps = singular_to_stationary(d.sp);
    const EtaFit fit = fit_eta(curve, ps.m, ps.lambda);
    r.linf = fit.report.linf;
    r.pass = fit.report.linf <= kEtaTol;
    r.doc = {{"alpha", d.sp.alpha}, {"varpi", d.sp.varpi}, {"m", ps.m},
             {"lambda", ps.lambda}, {"eta_hat", fit.eta_hat}, {"linf", fit.report.linf},
             {"pass", r.pass}};
    return r;
  });

  VerifyReport out;
  bool p1 = false, p2 = false, p3 = false;
  json relations;
  relations["weighted_to_elastic"] = section_json(weighted_cases, p1);
  relations["potential_to_elastic"] = section_json(potential_cases, p2);
  relations["weighted_to_potential"] = section_json(bridge_cases, p3);
  out.all_pass = p1 && p2 && p3;
  out.doc = {{"seed", config.seed},
             {"cases_per_relation", config.cases},
             {"h", config.h},
             {"relations", relations},
             {"all_pass", out.all_pass}};
  return out;
}

}  // namespace elastica
