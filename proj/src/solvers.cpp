#include "elastica/solvers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "elastica/quadrature.hpp"

namespace elastica {

namespace {

template <std::size_t D>
using State = std::array<double, D>;

// Classical 4th-order fixed-step integration with compensated state updates,
// recording every node. The right-hand side may throw to abort on guards.
template <std::size_t D, class Rhs>
std::vector<State<D>> integrate_fixed(const Rhs& rhs, State<D> y, double t0, std::size_t n_steps,
                                      double h) {
  std::vector<State<D>> nodes;
  nodes.reserve(n_steps + 1);
  nodes.push_back(y);

  State<D> carry{};
  State<D> k1, k2, k3, k4, tmp;
  for (std::size_t step = 0; step < n_steps; ++step) {
    const double t = t0 + static_cast<double>(step) * h;
    rhs(t, y, k1);
    for (std::size_t i = 0; i < D; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < D; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < D; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(t + h, tmp, k4);
    for (std::size_t i = 0; i < D; ++i) {
      const double delta = (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      const double yc = delta - carry[i];
      const double t2 = y[i] + yc;
      carry[i] = (t2 - y[i]) - yc;
      y[i] = t2;
    }
    nodes.push_back(y);
  }
  return nodes;
}

// Dormand-Prince 5(4) embedded pair. Steps are capped at h_max so the output
// sampling stays dense enough for the geometric validation.
template <std::size_t D, class Rhs>
void integrate_adaptive(const Rhs& rhs, State<D> y, double t0, double t1, double rtol, double atol,
                        double h_max, std::vector<double>& ts, std::vector<State<D>>& nodes) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double t = t0;
  double h = h_max;
  ts.push_back(t);
  nodes.push_back(y);

  State<D> k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
  std::size_t evals = 0;
  const std::size_t max_evals = 20'000'000;
  while (t < t1) {
    h = std::min(h, t1 - t);
    // Absorb what would become a sliver step into the final one; two nearly
    // coincident samples would wreck the finite-difference validation.
    bool final_step = false;
    if (t1 - t <= 1.5 * h) {
      h = t1 - t;
      final_step = true;
    }
    if (h < 1e-14 * std::max(1.0, std::abs(t1)))
      fail(Errc::StepFailure, "adaptive step underflow at s = " + std::to_string(t));
    if (++evals > max_evals) fail(Errc::StepFailure, "adaptive step budget exhausted");

    rhs(t, y, k1);
    for (std::size_t i = 0; i < D; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + h / 5.0, tmp, k2);
    for (std::size_t i = 0; i < D; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + 3.0 * h / 10.0, tmp, k3);
    for (std::size_t i = 0; i < D; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + 4.0 * h / 5.0, tmp, k4);
    for (std::size_t i = 0; i < D; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + 8.0 * h / 9.0, tmp, k5);
    for (std::size_t i = 0; i < D; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, tmp, k6);
    for (std::size_t i = 0; i < D; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(t + h, ynew, k7);

    double err2 = 0.0;
    for (std::size_t i = 0; i < D; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err2 += (e / sc) * (e / sc);
    }
    const double err = std::sqrt(err2 / static_cast<double>(D));

    if (err <= 1.0) {
      t = final_step ? t1 : t + h;
      y = ynew;
      ts.push_back(t);
      nodes.push_back(y);
    }
    const double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
    h = std::min(h, h_max);
  }
}

// Assembles a validated curve from angle-system nodes, with kappa from the
// closed-form right-hand side.
template <class KappaFn>
PlanarCurve curve_from_angle_nodes(const std::vector<double>& s,
                                   const std::vector<State<3>>& nodes, const KappaFn& kappa_of,
                                   double tol_geom) {
  RawCurveSamples raw;
  const std::size_t n = nodes.size();
  raw.s = s;
  raw.x.resize(n);
  raw.z.resize(n);
  raw.theta.resize(n);
  raw.kappa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw.x[i] = nodes[i][0];
    raw.z[i] = nodes[i][1];
    raw.theta[i] = nodes[i][2];
    raw.kappa[i] = kappa_of(nodes[i]);
  }
  return validate_curve(raw, tol_geom);
}

std::vector<double> uniform_grid(double t0, std::size_t n_steps, double h) {
  std::vector<double> s(n_steps + 1);
  for (std::size_t i = 0; i <= n_steps; ++i) s[i] = t0 + static_cast<double>(i) * h;
  return s;
}

struct FixedPlan {
  std::size_t n_steps;
  double h;
};

FixedPlan fixed_plan(double s_max, double h_request) {
  if (!(s_max > 0.0)) fail(Errc::InvalidArgument, "s_max must be positive");
  if (!(h_request > 0.0)) fail(Errc::InvalidArgument, "step size must be positive");
  const auto n = static_cast<std::size_t>(std::max<long long>(1, std::llround(s_max / h_request)));
  return {n, s_max / static_cast<double>(n)};
}

template <class Rhs, class KappaFn>
PlanarCurve solve_angle_system(const Rhs& rhs, const KappaFn& kappa_of, const InitialData& init,
                               double s_max, const StepControl& control) {
  const State<3> y0 = {init.x0, init.z0, init.theta0};
  if (control.mode == StepControl::Mode::Fixed) {
    const FixedPlan plan = fixed_plan(s_max, control.h);
    auto nodes = integrate_fixed<3>(rhs, y0, 0.0, plan.n_steps, plan.h);
    return curve_from_angle_nodes(uniform_grid(0.0, plan.n_steps, plan.h), nodes, kappa_of,
                                  control.tol_geom);
  }
  std::vector<double> ts;
  std::vector<State<3>> nodes;
  integrate_adaptive<3>(rhs, y0, 0.0, s_max, control.rtol, control.atol, control.h, ts, nodes);
  return curve_from_angle_nodes(ts, nodes, kappa_of, control.tol_geom);
}

bool needs_height_guard(double exponent) { return exponent < 0.0 || !is_integer(exponent); }

}  // namespace

PlanarCurve solve_singular(const SingularParams& sp, const InitialData& init, double s_max,
                           const StepControl& control) {
  if (sp.alpha == 0.0) fail(Errc::ParamsExcluded, "alpha = 0 gives constant mean curvature");
  if (!(init.z0 > 0.0)) fail(Errc::InvalidArgument, "initial height must be positive");

  const double alpha = sp.alpha, varpi = sp.varpi;
  auto rhs = [alpha, varpi](double, const State<3>& y, State<3>& dy) {
    if (y[1] < kHeightGuard)
      fail(Errc::HeightVanished, "height reached the guard band during integration");
    const double c = std::cos(y[2]);
    dy[0] = c;
    dy[1] = std::sin(y[2]);
    dy[2] = alpha * c / y[1] + varpi;
  };
  auto kappa_of = [alpha, varpi](const State<3>& y) {
    return alpha * std::cos(y[2]) / y[1] + varpi;
  };
  return solve_angle_system(rhs, kappa_of, init, s_max, control);
}

PlanarCurve solve_stationary(const StationaryParams& st, const InitialData& init, double s_max,
                             const StepControl& control) {
  if (st.eta == 0.0 || st.m == 0.0)
    fail(Errc::ParamsExcluded, "eta = 0 or m = 0 gives constant mean curvature");
  const bool guard = needs_height_guard(st.m);
  if (guard && !(init.z0 > 0.0)) fail(Errc::InvalidArgument, "initial height must be positive");

  const double eta = st.eta, m = st.m, lambda = st.lambda;
  auto rhs = [eta, m, lambda, guard](double, const State<3>& y, State<3>& dy) {
    if (guard && y[1] < kHeightGuard)
      fail(Errc::HeightVanished, "height reached the guard band during integration");
    dy[0] = std::cos(y[2]);
    dy[1] = std::sin(y[2]);
    dy[2] = eta * std::pow(y[1], m) + lambda;
  };
  auto kappa_of = [eta, m, lambda](const State<3>& y) {
    return eta * std::pow(y[1], m) + lambda;
  };
  return solve_angle_system(rhs, kappa_of, init, s_max, control);
}

PlanarCurve solve_elastic(const ElasticParams& ep, const InitialData& init, double s_max,
                          const StepControl& control) {
  if (ep.p == 0.0 || ep.p == 1.0)
    fail(Errc::ExponentDegenerate, "the curvature-energy system degenerates for p in {0, 1}");
  const double p = ep.p, mu = ep.mu, sigma = ep.sigma;
  const LagrangianKind kind = PowerLagrangian{p, mu, sigma};
  if (!lagrangian_in_domain(kind, init.kappa0))
    fail(Errc::DomainViolation, "initial curvature outside the Lagrangian domain");

  // v = (kappa - mu)^(p-1); invertibility requires v > 0 unless p = 2.
  const bool v_free = (p == 2.0);
  const double inv_exp = 1.0 / (p - 1.0);
  auto excess_of = [v_free, inv_exp](double v) {
    if (!v_free && v <= 0.0)
      fail(Errc::DomainViolation, "v left the invertibility domain during integration");
    return v_free ? v : std::pow(v, inv_exp);
  };

  auto rhs = [p, mu, sigma, excess_of](double, const State<5>& y, State<5>& dy) {
    const double v = y[3];
    const double excess = excess_of(v);
    const double kappa = mu + excess;
    dy[0] = std::cos(y[2]);
    dy[1] = std::sin(y[2]);
    dy[2] = kappa;
    dy[3] = y[4];
    // (kappa - mu)^p = v * excess
    dy[4] = (kappa * (v * excess + sigma) - p * kappa * kappa * v) / p;
  };

  const double v0 = std::pow(init.kappa0 - mu, p - 1.0);
  const double w0 = (p - 1.0) * std::pow(init.kappa0 - mu, p - 2.0) * init.kappa0p;
  const State<5> y0 = {init.x0, init.z0, init.theta0, v0, w0};

  std::vector<double> ts;
  std::vector<State<5>> nodes;
  if (control.mode == StepControl::Mode::Fixed) {
    const FixedPlan plan = fixed_plan(s_max, control.h);
    nodes = integrate_fixed<5>(rhs, y0, 0.0, plan.n_steps, plan.h);
    ts = uniform_grid(0.0, plan.n_steps, plan.h);
  } else {
    integrate_adaptive<5>(rhs, y0, 0.0, s_max, control.rtol, control.atol, control.h, ts, nodes);
  }

  RawCurveSamples raw;
  const std::size_t n = nodes.size();
  raw.s = ts;
  raw.x.resize(n);
  raw.z.resize(n);
  raw.theta.resize(n);
  raw.kappa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw.x[i] = nodes[i][0];
    raw.z[i] = nodes[i][1];
    raw.theta[i] = nodes[i][2];
    raw.kappa[i] = mu + excess_of(nodes[i][3]);
  }
  return validate_curve(raw, control.tol_geom);
}

namespace {

struct GraphShooter {
  double eta, m, lambda;
  double x0, x1, f0;
  std::size_t nx;
  bool guard;

  // Integrates (f, fp, s) over x with slope a at x0. Returns false when the
  // height guard aborted the shot; nodes are recorded only when requested.
  bool shoot(double a, std::vector<State<3>>* record, double& f_end) const {
    const double hx = (x1 - x0) / static_cast<double>(nx);
    const State<3> y0 = {f0, a, 0.0};
    auto rhs = [this](double, const State<3>& y, State<3>& dy) {
      if (guard && y[0] < kHeightGuard) fail(Errc::HeightVanished, "graph height vanished");
      const double slope2 = 1.0 + y[1] * y[1];
      const double root = std::sqrt(slope2);
      dy[0] = y[1];
      dy[1] = (eta * std::pow(y[0], m) + lambda) * slope2 * root;
      dy[2] = root;
    };
    try {
      auto nodes = integrate_fixed<3>(rhs, y0, x0, nx, hx);
      f_end = nodes.back()[0];
      if (record) *record = std::move(nodes);
      return true;
    } catch (const Error& e) {
      if (e.code() == Errc::HeightVanished) return false;
      throw;
    }
  }
};

}  // namespace

GraphCurve solve_stationary_graph_bvp(const StationaryParams& st, double x0, double x1, double f0,
                                      double f1, const ShootingControl& control) {
  if (st.eta == 0.0 || st.m == 0.0)
    fail(Errc::ParamsExcluded, "eta = 0 or m = 0 gives constant mean curvature");
  if (!(x1 > x0)) fail(Errc::InvalidArgument, "empty interval");
  const bool guard = needs_height_guard(st.m);
  if (guard && (f0 <= kHeightGuard || f1 <= kHeightGuard))
    fail(Errc::HeightVanished, "boundary heights must stay above the guard band");

  const GraphShooter shooter{st.eta, st.m, st.lambda, x0, x1, f0, control.grid_intervals, guard};
  int budget = control.max_iterations;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Boundary mismatch; a crashed shot counts as -inf (the end fell short).
  auto mismatch = [&](double a) -> double {
    --budget;
    double f_end = 0.0;
    if (!shooter.shoot(a, nullptr, f_end)) return -kInf;
    return f_end - f1;
  };

  // Bracket by doubling around the guess (default: the chord slope): any
  // adjacent pair of evaluated slopes with opposite mismatch signs brackets
  // a root.
  const double a0 = std::isfinite(control.slope_guess) ? control.slope_guess
                                                       : (f1 - f0) / (x1 - x0);
  std::vector<std::pair<double, double>> evals;  // (slope, mismatch)
  auto probe = [&](double a) { evals.emplace_back(a, mismatch(a)); };
  probe(a0);
  double lo = 0.0, hi = 0.0;
  bool bracketed = false;
  double delta = std::max(0.25, 0.125 * std::abs(a0));
  for (int k = 0; k < 40 && !bracketed && budget > 0; ++k, delta *= 2.0) {
    probe(a0 + delta);
    probe(a0 - delta);
    std::sort(evals.begin(), evals.end());
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < evals.size(); ++i) {
      if ((evals[i].second < 0.0) == (evals[i + 1].second < 0.0)) continue;
      // several roots may exist; take the bracket nearest the guess
      const double dist =
          std::min(std::abs(evals[i].first - a0), std::abs(evals[i + 1].first - a0));
      if (dist < best_dist) {
        best_dist = dist;
        lo = evals[i].first;
        hi = evals[i + 1].first;
        if (!(evals[i].second < 0.0)) std::swap(lo, hi);  // negative side at lo
        bracketed = true;
      }
    }
  }
  if (!bracketed) fail(Errc::ShootingDiverged, "no sign change found while bracketing the slope");

  while (budget-- > 0 &&
         std::abs(hi - lo) > 1e-13 * std::max({1.0, std::abs(lo), std::abs(hi)})) {
    const double mid = 0.5 * (lo + hi);
    if (mismatch(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double a = 0.5 * (lo + hi);

  // Derivative-based refinement of the mismatch.
  for (int it = 0; it < 20 && budget > 0; ++it) {
    const double fa = mismatch(a);
    if (!std::isfinite(fa)) break;
    if (std::abs(fa) <= control.boundary_tol) break;
    const double da = 1e-7 * std::max(1.0, std::abs(a));
    const double deriv = (mismatch(a + da) - mismatch(a - da)) / (2.0 * da);
    if (!std::isfinite(deriv) || deriv == 0.0) break;
    const double next = a - fa / deriv;
    a = (std::min(lo, hi) < next && next < std::max(lo, hi)) ? next : 0.5 * (lo + hi);
  }

  std::vector<State<3>> nodes;
  double f_end = 0.0;
  if (!shooter.shoot(a, &nodes, f_end) || std::abs(f_end - f1) > 1e-10)
    fail(Errc::ShootingDiverged, "boundary mismatch did not converge");

  GraphCurve g;
  g.x0 = x0;
  g.x1 = x1;
  const std::size_t n = nodes.size();
  const double hx = (x1 - x0) / static_cast<double>(control.grid_intervals);
  g.x.resize(n);
  g.f.resize(n);
  g.fp.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.x[i] = x0 + static_cast<double>(i) * hx;
    g.f[i] = nodes[i][0];
    g.fp[i] = nodes[i][1];
  }
  check_graph(g);
  return g;
}

namespace {

FirstIntegralReport first_integral_from_samples(const StationaryParams& st,
                                                std::span<const double> nu2,
                                                std::span<const double> z) {
  if (st.m == -1.0) fail(Errc::MExcluded, "the first integral is defined for m != -1");
  const double coef = st.eta / (st.m + 1.0);
  std::vector<double> q(z.size());
  KahanSum mean;
  for (std::size_t i = 0; i < z.size(); ++i) {
    q[i] = -nu2[i] - coef * std::pow(z[i], st.m + 1.0) - st.lambda * z[i];
    mean.add(q[i]);
  }
  FirstIntegralReport rep;
  rep.c_hat = mean.value() / static_cast<double>(z.size());
  for (double v : q) rep.drift = std::max(rep.drift, std::abs(v - rep.c_hat));
  return rep;
}

}  // namespace

FirstIntegralReport first_integral_report(const StationaryParams& st, const PlanarCurve& curve) {
  return first_integral_from_samples(st, curve.nu2(), curve.z());
}

FirstIntegralReport first_integral_report(const StationaryParams& st, const GraphCurve& g) {
  const std::vector<double> nu2 = g.nu2();
  return first_integral_from_samples(st, nu2, g.f);
}

double arc_length(const GraphCurve& g) {
  std::vector<double> integrand(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    integrand[i] = std::sqrt(1.0 + g.fp[i] * g.fp[i]);
  return simpson_uniform(integrand, g.spacing());
}

PlanarCurve stationary_curve_from_graph(const StationaryParams& st, const GraphCurve& g,
                                        std::size_t samples, double tol_geom) {
  check_graph(g);
  if (samples < 5) fail(Errc::InvalidArgument, "need at least 5 samples");
  const double total = arc_length(g);
  StepControl control;
  control.h = total / static_cast<double>(samples - 1);
  control.tol_geom = tol_geom;
  InitialData init;
  init.x0 = g.x0;
  init.z0 = g.f.front();
  init.theta0 = std::atan(g.fp.front());
  return solve_stationary(st, init, total, control);
}

}  // namespace elastica
