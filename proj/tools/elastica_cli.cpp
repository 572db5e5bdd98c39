// Batch front end: solving, residual checks, parameter maps, energies,
// stability, minimizer comparison, flux checks, and the randomized
// verification runs. All reports are JSON on stdout or --out.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elastica/energies.hpp"
#include "elastica/io.hpp"
#include "elastica/residuals.hpp"
#include "elastica/solvers.hpp"
#include "elastica/stability.hpp"
#include "elastica/verify.hpp"

namespace {

using elastica::json;

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) elastica::fail(elastica::Errc::IoError, "cannot write " + out_path);
  out << doc.dump(2) << '\n';
}

std::string sidecar_path(const std::string& csv_path) {
  const auto dot = csv_path.find_last_of('.');
  if (dot == std::string::npos) return csv_path + ".json";
  return csv_path.substr(0, dot) + ".json";
}

void validate_params(const elastica::StationaryParams& st) {
  if (st.eta == 0.0 || st.m == 0.0)
    elastica::fail(elastica::Errc::ParamsExcluded, "eta and m must be nonzero");
}
void validate_params(const elastica::SingularParams& sp) {
  if (sp.alpha == 0.0) elastica::fail(elastica::Errc::AlphaExcluded, "alpha must be nonzero");
}

struct ParamFlags {
  double alpha = 1.0, varpi = 0.0;
  double eta = 1.0, m = 1.0, lambda = 0.0;
  double p = 2.0, mu = 0.0, sigma = 0.0;
  int n = 1;
  double varsigma = 0.0;

  elastica::SingularParams singular() const {
    elastica::SingularParams sp{alpha, varpi};
    validate_params(sp);
    return sp;
  }
  elastica::StationaryParams stationary() const {
    elastica::StationaryParams st{eta, m, lambda};
    validate_params(st);
    return st;
  }
  elastica::ElasticParams elastic() const { return {p, mu, sigma}; }
  elastica::WillmoreParams willmore() const { return {n, p, mu, varsigma}; }

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "density exponent (weighted-area family)");
    cmd->add_option("--varpi", varpi, "volume multiplier (weighted-area family)");
    cmd->add_option("--eta", eta, "potential strength (potential family)");
    cmd->add_option("--m", m, "potential exponent (potential family)");
    cmd->add_option("--lambda", lambda, "volume multiplier (potential family)");
    cmd->add_option("--p", p, "curvature exponent");
    cmd->add_option("--mu", mu, "spontaneous-curvature shift");
    cmd->add_option("--sigma", sigma, "length multiplier");
    cmd->add_option("--n", n, "ambient dimension parameter");
    cmd->add_option("--varsigma", varsigma, "area multiplier (mean-curvature family)");
  }
};

elastica::PlanarCurve load_curve(const std::string& path, double tol_geom) {
  return elastica::validate_curve(elastica::read_curve_csv(path), tol_geom);
}

json control_to_json(const elastica::StepControl& c) {
  return {{"mode", c.mode == elastica::StepControl::Mode::Fixed ? "fixed" : "adaptive"},
          {"h", c.h},
          {"rtol", c.rtol},
          {"atol", c.atol}};
}

// Merges a JSON config file into the argument list; explicit flags override
// the file because they come later on the synthetic command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string config_path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") {
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
  }
  if (config_path.empty()) return args;

  std::ifstream in(config_path);
  if (!in) elastica::fail(elastica::Errc::IoError, "cannot open config " + config_path);
  json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    elastica::fail(elastica::Errc::IoError, std::string("bad config: ") + e.what());
  }

  std::vector<std::string> merged;
  std::size_t rest = 0;
  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    merged.push_back(args[0]);  // subcommand given explicitly
    rest = 1;
  } else if (cfg.contains("subcommand")) {
    merged.push_back(cfg["subcommand"].get<std::string>());
  }
  for (const auto& [key, value] : cfg.items()) {
    if (key == "subcommand") continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) merged.push_back("--" + key);
      continue;
    }
    merged.push_back("--" + key);
    merged.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  merged.insert(merged.end(), args.begin() + static_cast<std::ptrdiff_t>(rest), args.end());
  return merged;
}

int run(std::vector<std::string> args) {
  args = merge_config(std::move(args));

  CLI::App app{"generating curves of cylindrical critical hypersurfaces"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string out_path;
  elastica::StepControl control;
  std::string mode = "fixed";
  std::uint64_t seed = 20250809;

  auto add_shared = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");  // keep --h free for the step size
    cmd->add_option("--out", out_path, "output path (default: stdout for JSON)");
    cmd->add_option("--h", control.h, "step / resample spacing");
    cmd->add_option("--rtol", control.rtol, "adaptive relative tolerance");
    cmd->add_option("--atol", control.atol, "adaptive absolute tolerance");
    cmd->add_option("--mode", mode, "fixed | adaptive")
        ->check(CLI::IsMember({"fixed", "adaptive"}));
    cmd->add_option("--seed", seed, "random seed");
  };

  // --- solve ---------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "integrate a generating curve");
  ParamFlags sp_solve;
  std::string solve_family;
  elastica::InitialData init;
  double smax = 1.0;
  bool bvp = false;
  double xa = -1.0, xb = 1.0, f0 = 1.0, f1 = 1.0;
  std::size_t nx = 4096;
  std::string svg_path;
  solve->add_option("--family", solve_family, "elastic | singular | stationary")
      ->required()
      ->check(CLI::IsMember({"elastic", "singular", "stationary"}));
  sp_solve.add_flags(solve);
  solve->add_option("--x0", init.x0, "initial x");
  solve->add_option("--z0", init.z0, "initial height");
  solve->add_option("--theta0", init.theta0, "initial tangent angle");
  solve->add_option("--kappa0", init.kappa0, "initial curvature (elastic)");
  solve->add_option("--kappa0p", init.kappa0p, "initial curvature derivative (elastic)");
  solve->add_option("--smax", smax, "arc length to integrate");
  solve->add_flag("--bvp", bvp, "solve the stationary Dirichlet graph problem instead");
  solve->add_option("--xa", xa, "graph interval left end (bvp)");
  solve->add_option("--xb", xb, "graph interval right end (bvp)");
  solve->add_option("--f0", f0, "left boundary height (bvp)");
  solve->add_option("--f1", f1, "right boundary height (bvp)");
  solve->add_option("--nx", nx, "graph grid intervals (bvp)");
  double slope_guess = std::numeric_limits<double>::quiet_NaN();
  solve->add_option("--slope-guess", slope_guess,
                    "starting slope for the shooting search (bvp)");
  solve->add_option("--svg", svg_path, "also write an SVG polyline");
  add_shared(solve);

  // --- residual ------------------------------------------------------------
  auto* residual = app.add_subcommand("residual", "equilibrium residual of a curve");
  ParamFlags sp_res;
  std::string res_family, res_fit = "none", in_path;
  residual->add_option("--family", res_family, "elastic | singular | stationary | willmore")
      ->required()
      ->check(CLI::IsMember({"elastic", "singular", "stationary", "willmore"}));
  residual->add_option("--fit", res_fit, "sigma | eta | none")
      ->check(CLI::IsMember({"sigma", "eta", "none"}));
  residual->add_option("--in", in_path, "curve CSV")->required();
  sp_res.add_flags(residual);
  add_shared(residual);
  bool res_samples = false;
  residual->add_flag("--with-samples", res_samples, "include per-sample residual values");

  // --- map -----------------------------------------------------------------
  auto* map_cmd = app.add_subcommand("map", "parameter maps between the families");
  ParamFlags sp_map;
  std::string map_from, map_to;
  map_cmd->add_option("--from", map_from, "singular | stationary | willmore")
      ->required()
      ->check(CLI::IsMember({"singular", "stationary", "willmore"}));
  map_cmd->add_option("--to", map_to, "elastic | stationary")
      ->required()
      ->check(CLI::IsMember({"elastic", "stationary"}));
  sp_map.add_flags(map_cmd);
  add_shared(map_cmd);

  // --- energy ----------------------------------------------------------------
  auto* energy = app.add_subcommand("energy", "functional value over a curve or graph");
  ParamFlags sp_energy;
  std::string energy_functional, energy_in;
  energy->add_option("--functional", energy_functional,
                     "elastic | willmore | weighted | potential")
      ->required()
      ->check(CLI::IsMember({"elastic", "willmore", "weighted", "potential"}));
  energy->add_option("--in", energy_in, "curve CSV (elastic/willmore) or graph CSV")->required();
  sp_energy.add_flags(energy);
  add_shared(energy);

  // --- stability -------------------------------------------------------------
  auto* stability = app.add_subcommand("stability", "Dirichlet stability report for a graph");
  ParamFlags sp_stab;
  std::string stab_in;
  std::size_t stab_samples = 4097;
  int stab_tests = 8;
  stability->add_option("--in", stab_in, "graph CSV")->required();
  stability->add_option("--samples", stab_samples, "arc-length grid nodes");
  stability->add_option("--tests", stab_tests, "number of random test functions");
  sp_stab.add_flags(stability);
  add_shared(stability);

  // --- minimize-check ----------------------------------------------------------
  auto* mincheck = app.add_subcommand("minimize-check", "energy comparison of two graphs");
  ParamFlags sp_min;
  std::string min_f, min_g;
  mincheck->add_option("--f", min_f, "stationary graph CSV")->required();
  mincheck->add_option("--g", min_g, "competitor graph CSV")->required();
  sp_min.add_flags(mincheck);
  add_shared(mincheck);

  // --- flux-check --------------------------------------------------------------
  auto* flux = app.add_subcommand("flux-check", "closed-curve flux identity");
  ParamFlags sp_flux;
  std::string flux_in;
  flux->add_option("--in", flux_in, "closed curve CSV")->required();
  sp_flux.add_flags(flux);
  add_shared(flux);

  // --- verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "randomized relation round trips");
  int verify_cases = 20;
  verify->add_option("--cases", verify_cases, "cases per relation");
  add_shared(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : 2;
  }
  control.mode = (mode == "adaptive") ? elastica::StepControl::Mode::Adaptive
                                      : elastica::StepControl::Mode::Fixed;

  if (solve->parsed()) {
    if (bvp) {
      if (solve_family != "stationary")
        elastica::fail(elastica::Errc::InvalidArgument, "--bvp requires --family stationary");
      const auto st = sp_solve.stationary();
      elastica::ShootingControl shoot;
      shoot.grid_intervals = nx;
      shoot.slope_guess = slope_guess;
      const elastica::GraphCurve g = elastica::solve_stationary_graph_bvp(st, xa, xb, f0, f1,
                                                                          shoot);
      if (out_path.empty())
        elastica::fail(elastica::Errc::InvalidArgument, "--out is required for solve");
      elastica::write_graph_csv(out_path, g);
      json side{{"params", elastica::params_to_json(st)},
                {"bvp", {{"xa", xa}, {"xb", xb}, {"f0", f0}, {"f1", f1}, {"nx", nx}}},
                {"boundary_residual", std::abs(g.f.back() - f1)},
                {"el_residual_linf", elastica::graph_el_residual(g, st).linf}};
      emit(side, sidecar_path(out_path));
      return 0;
    }

    elastica::PlanarCurve curve = [&] {
      if (solve_family == "singular")
        return elastica::solve_singular(sp_solve.singular(), init, smax, control);
      if (solve_family == "stationary")
        return elastica::solve_stationary(sp_solve.stationary(), init, smax, control);
      return elastica::solve_elastic(sp_solve.elastic(), init, smax, control);
    }();

    if (out_path.empty())
      elastica::fail(elastica::Errc::InvalidArgument, "--out is required for solve");
    elastica::write_curve_csv(out_path, curve);
    if (!svg_path.empty()) elastica::write_curve_svg(svg_path, curve);

    json side;
    if (solve_family == "singular")
      side["params"] = elastica::params_to_json(sp_solve.singular());
    else if (solve_family == "stationary")
      side["params"] = elastica::params_to_json(sp_solve.stationary());
    else
      side["params"] = elastica::params_to_json(sp_solve.elastic());
    side["init"] = {{"x0", init.x0},       {"z0", init.z0},
                    {"theta0", init.theta0}, {"kappa0", init.kappa0},
                    {"kappa0p", init.kappa0p}, {"smax", smax}};
    side["control"] = control_to_json(control);
    side["first_integral"] = nullptr;
    if (solve_family == "stationary" && sp_solve.m != -1.0)
      side["first_integral"] =
          elastica::first_integral_to_json(first_integral_report(sp_solve.stationary(), curve));
    emit(side, sidecar_path(out_path));
    return 0;
  }

  if (residual->parsed()) {
    const elastica::PlanarCurve curve = load_curve(in_path, control.tol_geom);
    json doc;
    if (res_fit == "sigma") {
      const auto fit = elastica::fit_sigma(curve, sp_res.p, sp_res.mu, control.h);
      doc = elastica::residual_report_to_json(fit.report, res_samples);
      doc["sigma_hat"] = fit.sigma_hat;
    } else if (res_fit == "eta") {
      const auto fit = elastica::fit_eta(curve, sp_res.m, sp_res.lambda);
      doc = elastica::residual_report_to_json(fit.report, res_samples);
      doc["eta_hat"] = fit.eta_hat;
    } else if (res_family == "singular") {
      doc = elastica::residual_report_to_json(
          elastica::singular_el_residual(curve, sp_res.singular()), res_samples);
    } else if (res_family == "stationary") {
      doc = elastica::residual_report_to_json(
          elastica::stationary_el_residual(curve, sp_res.stationary()), res_samples);
    } else if (res_family == "willmore") {
      doc = elastica::residual_report_to_json(
          elastica::willmore_cyl_residual(curve, sp_res.willmore(), control.h), res_samples);
    } else {
      doc = elastica::residual_report_to_json(
          elastica::elastic_el_residual(
              curve, elastica::PowerLagrangian{sp_res.p, sp_res.mu, sp_res.sigma}, control.h),
          res_samples);
    }
    emit(doc, out_path);
    return 0;
  }

  if (map_cmd->parsed()) {
    json doc;
    if (map_from == "singular" && map_to == "elastic") {
      doc = elastica::kind_to_json(elastica::singular_to_elastic(sp_map.singular()));
    } else if (map_from == "stationary" && map_to == "elastic") {
      doc = elastica::kind_to_json(
          elastica::stationary_to_elastic(sp_map.stationary(), sp_map.sigma));
    } else if (map_from == "willmore" && map_to == "elastic") {
      doc = elastica::params_to_json(elastica::willmore_to_elastic(sp_map.willmore()));
    } else if (map_from == "singular" && map_to == "stationary") {
      const auto ps = elastica::singular_to_stationary(sp_map.singular());
      doc = {{"family", "stationary"}, {"m", ps.m}, {"lambda", ps.lambda}, {"eta", "unfixed"}};
    } else {
      elastica::fail(elastica::Errc::InvalidArgument,
                     "unsupported map " + map_from + " -> " + map_to);
    }
    emit(doc, out_path);
    return 0;
  }

  if (energy->parsed()) {
    json doc;
    if (energy_functional == "elastic") {
      const auto curve = load_curve(energy_in, control.tol_geom);
      doc = elastica::energy_to_json(elastica::elastic_energy(
          curve, elastica::PowerLagrangian{sp_energy.p, sp_energy.mu, sp_energy.sigma}));
    } else if (energy_functional == "willmore") {
      const auto curve = load_curve(energy_in, control.tol_geom);
      doc = elastica::energy_to_json(
          elastica::cylinder_willmore_energy(curve, sp_energy.willmore()));
    } else if (energy_functional == "weighted") {
      const auto g = elastica::read_graph_csv(energy_in);
      doc = elastica::energy_to_json(elastica::weighted_area_energy(g, sp_energy.singular()));
    } else {
      const auto g = elastica::read_graph_csv(energy_in);
      doc = elastica::energy_to_json(elastica::graph_potential_energy(g, sp_energy.stationary()));
    }
    emit(doc, out_path);
    return 0;
  }

  if (stability->parsed()) {
    const auto st = sp_stab.stationary();
    const elastica::GraphCurve g = elastica::read_graph_csv(stab_in);
    const elastica::PlanarCurve curve =
        elastica::stationary_curve_from_graph(st, g, stab_samples, control.tol_geom);
    auto rep = elastica::stability_report(curve, st, stab_tests, seed);
    json doc = elastica::stability_report_to_json(rep);
    doc["graph_el_residual_linf"] = elastica::graph_el_residual(g, st).linf;
    emit(doc, out_path);
    return 0;
  }

  if (mincheck->parsed()) {
    const auto st = sp_min.stationary();
    const auto f_graph = elastica::read_graph_csv(min_f);
    const auto g_graph = elastica::read_graph_csv(min_g);
    const auto cmp = elastica::minimizer_compare(f_graph, st, g_graph);
    emit(elastica::minimizer_comparison_to_json(cmp), out_path);
    return 0;
  }

  if (flux->parsed()) {
    const auto curve = load_curve(flux_in, control.tol_geom);
    const auto fi = elastica::closed_flux_identity(curve, sp_flux.eta, sp_flux.m);
    const auto cc = elastica::tangential_closure_check(curve);
    emit(elastica::flux_identity_to_json(fi, cc), out_path);
    return 0;
  }

  if (verify->parsed()) {
    elastica::VerifyConfig cfg;
    cfg.seed = seed;
    cfg.cases = verify_cases;
    cfg.h = control.h;
    const auto report = elastica::verify_relations(cfg);
    emit(report.doc, out_path);
    return report.all_pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(std::move(args));
  } catch (const elastica::Error& e) {
    std::cerr << e.what() << '\n';
    return elastica::errc_is_usage(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
