#include "elastica/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace elastica {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) fail(Errc::IoError, "cannot write " + path);
  return out;
}

std::vector<double> parse_row(const std::string& line, std::size_t expect, const std::string& path,
                              std::size_t lineno) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      row.push_back(std::stod(cell));
    } catch (const std::exception&) {
      fail(Errc::IoError, path + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
    }
  }
  if (row.size() != expect)
    fail(Errc::IoError, path + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(expect) + " columns");
  return row;
}

std::string read_header(std::ifstream& in, const std::string& path) {
  std::string header;
  if (!std::getline(in, header)) fail(Errc::IoError, path + ": empty file");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  return header;
}

}  // namespace

void write_curve_csv(const std::string& path, const PlanarCurve& curve) {
  auto out = open_out(path);
  out << "s,x,z,theta,kappa\n";
  for (std::size_t i = 0; i < curve.size(); ++i)
    out << fmt(curve.s()[i]) << ',' << fmt(curve.x()[i]) << ',' << fmt(curve.z()[i]) << ','
        << fmt(curve.theta()[i]) << ',' << fmt(curve.kappa()[i]) << '\n';
}

RawCurveSamples read_curve_csv(const std::string& path) {
  auto in = open_in(path);
  if (read_header(in, path) != "s,x,z,theta,kappa")
    fail(Errc::IoError, path + ": expected header s,x,z,theta,kappa");
  RawCurveSamples raw;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto row = parse_row(line, 5, path, lineno);
    raw.s.push_back(row[0]);
    raw.x.push_back(row[1]);
    raw.z.push_back(row[2]);
    raw.theta.push_back(row[3]);
    raw.kappa.push_back(row[4]);
  }
  return raw;
}

void write_graph_csv(const std::string& path, const GraphCurve& g) {
  auto out = open_out(path);
  out << "x,f,fp\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out << fmt(g.x[i]) << ',' << fmt(g.f[i]) << ',' << fmt(g.fp[i]) << '\n';
}

GraphCurve read_graph_csv(const std::string& path) {
  auto in = open_in(path);
  if (read_header(in, path) != "x,f,fp") fail(Errc::IoError, path + ": expected header x,f,fp");
  GraphCurve g;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto row = parse_row(line, 3, path, lineno);
    g.x.push_back(row[0]);
    g.f.push_back(row[1]);
    g.fp.push_back(row[2]);
  }
  if (g.x.size() < 2) fail(Errc::IoError, path + ": too few samples");
  g.x0 = g.x.front();
  g.x1 = g.x.back();
  check_graph(g);
  return g;
}

json params_to_json(const FamilyParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ElasticParams>)
          return {{"family", "elastic"}, {"p", p.p}, {"mu", p.mu}, {"sigma", p.sigma}};
        else if constexpr (std::is_same_v<T, WillmoreParams>)
          return {{"family", "willmore"},
                  {"n", p.n},
                  {"p", p.p},
                  {"mu", p.mu},
                  {"varsigma", p.varsigma}};
        else if constexpr (std::is_same_v<T, SingularParams>)
          return {{"family", "singular"}, {"alpha", p.alpha}, {"varpi", p.varpi}};
        else
          return {{"family", "stationary"}, {"eta", p.eta}, {"m", p.m}, {"lambda", p.lambda}};
      },
      params);
}

FamilyParams params_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "elastic")
    return ElasticParams{j.at("p").get<double>(), j.at("mu").get<double>(),
                         j.value("sigma", 0.0)};
  if (family == "willmore")
    return WillmoreParams{j.at("n").get<int>(), j.at("p").get<double>(), j.at("mu").get<double>(),
                          j.value("varsigma", 0.0)};
  if (family == "singular")
    return SingularParams{j.at("alpha").get<double>(), j.value("varpi", 0.0)};
  if (family == "stationary")
    return StationaryParams{j.at("eta").get<double>(), j.at("m").get<double>(),
                            j.value("lambda", 0.0)};
  fail(Errc::IoError, "unknown family tag '" + family + "'");
}

json kind_to_json(const LagrangianKind& kind) {
  if (const auto* pl = std::get_if<PowerLagrangian>(&kind))
    return {{"kind", "power"}, {"p", pl->p}, {"mu", pl->mu}, {"sigma", pl->sigma}};
  if (const auto* el = std::get_if<ExpLagrangian>(&kind)) return {{"kind", "exp"}, {"mu", el->mu}};
  const auto& ll = std::get<LogLagrangian>(kind);
  return {{"kind", "log"}, {"lambda", ll.lambda}, {"sigma", ll.sigma}};
}

LagrangianKind kind_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "power")
    return PowerLagrangian{j.at("p").get<double>(), j.at("mu").get<double>(),
                           j.value("sigma", 0.0)};
  if (kind == "exp") return ExpLagrangian{j.at("mu").get<double>()};
  if (kind == "log") return LogLagrangian{j.at("lambda").get<double>(), j.value("sigma", 0.0)};
  fail(Errc::IoError, "unknown Lagrangian kind '" + kind + "'");
}

json residual_report_to_json(const ResidualReport& rep, bool include_samples) {
  json j{{"linf", rep.linf}, {"l2", rep.l2}, {"n_interior", rep.n_interior}};
  if (include_samples) {
    j["s"] = rep.s;
    j["values"] = rep.values;
  }
  return j;
}

json energy_to_json(const EnergyValue& e) {
  json parts = json::object();
  for (const auto& [name, v] : e.parts) parts[name] = v;
  json j{{"total", e.total}, {"breakdown", parts}};
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

json first_integral_to_json(const FirstIntegralReport& rep) {
  return {{"c_hat", rep.c_hat}, {"drift", rep.drift}};
}

json stability_report_to_json(const StabilityReport& rep) {
  return {{"lambda_min", rep.lambda_min},
          {"identity_residual", rep.identity_residual},
          {"form_gap", rep.form_gap},
          {"stationary_linf", rep.stationary_linf},
          {"stationary_warning", rep.stationary_warning}};
}

json minimizer_comparison_to_json(const MinimizerComparison& cmp) {
  json j{{"energy_f", cmp.energy_f},
         {"energy_g", cmp.energy_g},
         {"calib_lhs", cmp.calib_lhs},
         {"ok", cmp.ok},
         {"energy_ordered", cmp.energy_ordered},
         {"calib_bounds_diff", cmp.calib_bounds_diff},
         {"calib_nonpositive", cmp.calib_nonpositive},
         {"stationary_linf", cmp.stationary_linf},
         {"stationary_warning", cmp.stationary_warning}};
  if (cmp.hypothesis_violated) j["hypothesis_violated"] = cmp.hypothesis_note;
  return j;
}

json flux_identity_to_json(const FluxIdentity& fi, const ClosureCheck& cc) {
  return {{"lhs", fi.lhs},
          {"rhs", fi.rhs},
          {"gap", fi.gap},
          {"closure", {{"int_nu2", cc.int_nu2}, {"int_kappa_nu2", cc.int_kappa_nu2}}}};
}

void write_curve_svg(const std::string& path, const PlanarCurve& curve) {
  const auto x = curve.x();
  const auto z = curve.z();
  double xmin = x[0], xmax = x[0], zmin = z[0], zmax = z[0];
  for (std::size_t i = 0; i < x.size(); ++i) {
    xmin = std::min(xmin, x[i]);
    xmax = std::max(xmax, x[i]);
    zmin = std::min(zmin, z[i]);
    zmax = std::max(zmax, z[i]);
  }
  const double span = std::max({xmax - xmin, zmax - zmin, 1e-12});
  const double pad = 0.05 * span;
  const double scale = 720.0 / (span + 2.0 * pad);

  auto out = open_out(path);
  const double w = (xmax - xmin + 2 * pad) * scale;
  const double h = (zmax - zmin + 2 * pad) * scale;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
      << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";
  out << "<polyline fill=\"none\" stroke=\"#1a6\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double px = (x[i] - xmin + pad) * scale;
    const double py = h - (z[i] - zmin + pad) * scale;  // SVG y grows downward
    out << fmt(px) << ',' << fmt(py) << (i + 1 < x.size() ? " " : "");
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace elastica
