#include "elastica/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "elastica/energies.hpp"
#include "elastica/kernels.hpp"
#include "elastica/quadrature.hpp"
#include "elastica/rng.hpp"

namespace elastica {

namespace {

constexpr double kStationaryWarnTol = 1e-6;

std::vector<double> deriv4(std::span<const double> f, double h) {
  std::vector<double> d(f.size());
  kernels::derivative4_map(f, h, d);
  return d;
}

void require_boundary_zero(std::span<const double> u) {
  double scale = 0.0;
  for (double v : u) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * std::max(1.0, scale);
  if (std::abs(u.front()) > tol || std::abs(u.back()) > tol)
    fail(Errc::NonZeroBoundary, "test function must vanish at both endpoints");
}

void require_matching(const JacobiDiscretization& jd, std::span<const double> u) {
  if (u.size() != jd.size())
    fail(Errc::InvalidArgument, "test function length does not match the grid");
  require_boundary_zero(u);
}

}  // namespace

JacobiDiscretization jacobi_potential(const PlanarCurve& curve, const StationaryParams& st) {
  if (st.eta == 0.0 || st.m == 0.0)
    fail(Errc::ParamsExcluded, "eta = 0 or m = 0 gives constant mean curvature");
  const PlanarCurve uni =
      curve.is_uniform() ? curve : resample_uniform(curve, curve.mean_spacing());

  if (st.m - 1.0 < 0.0 || !is_integer(st.m - 1.0)) {
    const auto z = uni.z();
    for (std::size_t i = 0; i < z.size(); ++i)
      if (!(z[i] > 0.0)) fail(Errc::HeightNonpositive, "potential needs positive height");
  }

  JacobiDiscretization jd;
  jd.st = st;
  jd.s0 = uni.s().front();
  jd.h = uni.mean_spacing();
  jd.s.assign(uni.s().begin(), uni.s().end());
  jd.z.assign(uni.z().begin(), uni.z().end());
  jd.nu2.assign(uni.nu2().begin(), uni.nu2().end());
  jd.kappa.assign(uni.kappa().begin(), uni.kappa().end());
  jd.q.resize(uni.size());
  kernels::jacobi_potential_map(jd.kappa, jd.z, jd.nu2, st.eta, st.m, jd.q);

  jd.stationary_linf = stationary_el_residual(uni, st).linf;
  jd.stationary_warning = jd.stationary_linf > kStationaryWarnTol;
  return jd;
}

double jacobi_identity_check(const PlanarCurve& curve, const StationaryParams& st) {
  const JacobiDiscretization jd = jacobi_potential(curve, st);
  const std::size_t n = jd.size();
  std::vector<double> dd(n - 2);
  kernels::second_difference_map(jd.nu2, jd.h, dd);

  double linf = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double lu = dd[i - 1] + jd.q[i] * jd.nu2[i];
    const double res = lu + st.m * st.eta * std::pow(jd.z[i], st.m - 1.0);
    linf = std::max(linf, std::abs(res));
  }
  return linf;
}

double second_variation(const JacobiDiscretization& jd, std::span<const double> u) {
  require_matching(jd, u);
  const std::vector<double> du = deriv4(u, jd.h);
  std::vector<double> integrand(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    integrand[i] = du[i] * du[i] - jd.q[i] * u[i] * u[i];
  return simpson_uniform(integrand, jd.h);
}

double second_variation(const PlanarCurve& curve, const StationaryParams& st,
                        std::span<const double> u) {
  return second_variation(jacobi_potential(curve, st), u);
}

double second_variation_direct(const JacobiDiscretization& jd, std::span<const double> u) {
  require_matching(jd, u);
  const std::size_t n = jd.size();
  std::vector<double> dd(n - 2);
  kernels::second_difference_map(u, jd.h, dd);
  std::vector<double> integrand(n, 0.0);  // endpoints contribute nothing (u = 0)
  for (std::size_t i = 1; i + 1 < n; ++i)
    integrand[i] = -u[i] * (dd[i - 1] + jd.q[i] * u[i]);
  return simpson_uniform(integrand, jd.h);
}

SubstitutedForm second_variation_substituted(const JacobiDiscretization& jd,
                                             std::span<const double> w) {
  require_matching(jd, w);
  const std::size_t n = jd.size();

  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = w[i] * jd.nu2[i];
  const double reference = second_variation(jd, u);

  const std::vector<double> dw = deriv4(w, jd.h);
  std::vector<double> integrand(n);
  const double me = jd.st.m * jd.st.eta;
  for (std::size_t i = 0; i < n; ++i) {
    const double weight = me * jd.nu2[i] * std::pow(jd.z[i], jd.st.m - 1.0);
    integrand[i] = weight * w[i] * w[i] + jd.nu2[i] * jd.nu2[i] * dw[i] * dw[i];
  }

  SubstitutedForm out;
  out.value = simpson_uniform(integrand, jd.h);
  const double scale = std::max(std::abs(out.value), std::abs(reference));
  out.form_gap = (scale < 1e-30) ? 0.0 : std::abs(out.value - reference) / scale;
  return out;
}

double min_eigenvalue(const JacobiDiscretization& jd) {
  const std::size_t n = jd.size();
  if (n < 12) fail(Errc::GridTooCoarse, "need at least 10 interior nodes");
  const std::size_t rows = n - 2;

  const double inv_h2 = 1.0 / (jd.h * jd.h);
  std::vector<double> diag(rows);
  for (std::size_t i = 0; i < rows; ++i) diag[i] = 2.0 * inv_h2 - jd.q[i + 1];
  const double off = -inv_h2;
  const double off2 = off * off;

  // Sturm count: eigenvalues of the tridiagonal matrix below x.
  auto count_below = [&](double x) {
    std::size_t count = 0;
    double t = diag[0] - x;
    if (t < 0.0) ++count;
    for (std::size_t i = 1; i < rows; ++i) {
      if (t == 0.0) t = 1e-300;
      t = diag[i] - x - off2 / t;
      if (t < 0.0) ++count;
    }
    return count;
  };

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double d : diag) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  lo -= 2.0 * std::abs(off);
  hi += 2.0 * std::abs(off);

  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max({1.0, std::abs(lo), std::abs(hi)});
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

MinimizerComparison minimizer_compare(const GraphCurve& f, const StationaryParams& st,
                                      const GraphCurve& g) {
  check_graph(f);
  check_graph(g);
  if (f.size() != g.size() || std::abs(f.x0 - g.x0) > 1e-12 || std::abs(f.x1 - g.x1) > 1e-12)
    fail(Errc::InvalidArgument, "graphs must share the same grid");

  const double scale = std::max({1.0, std::abs(f.f.front()), std::abs(f.f.back())});
  if (std::abs(g.f.front() - f.f.front()) > 1e-9 * scale ||
      std::abs(g.f.back() - f.f.back()) > 1e-9 * scale)
    fail(Errc::BoundaryMismatch, "competitor does not match the boundary heights");

  MinimizerComparison out;
  if (st.m <= 0.0) {
    out.hypothesis_violated = true;
    out.hypothesis_note = "m <= 0";
  }
  if (st.eta <= 0.0) {  // nu2 > 0 on graphs, so eta*nu2 > 0 reduces to eta > 0
    out.hypothesis_violated = true;
    out.hypothesis_note += out.hypothesis_note.empty() ? "eta*nu2 <= 0" : "; eta*nu2 <= 0";
  }

  const ResidualReport st_res = graph_el_residual(f, st);
  out.stationary_linf = st_res.linf;
  out.stationary_warning = st_res.linf > kStationaryWarnTol;

  out.energy_f = graph_potential_energy(f, st).total;
  out.energy_g = graph_potential_energy(g, st).total;

  const std::size_t n = f.size();
  std::vector<double> integrand(n);
  const double mp1 = st.m + 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fv = f.f[i], gv = g.f[i];
    integrand[i] =
        (std::pow(gv, mp1) - std::pow(fv, mp1)) / mp1 - std::pow(fv, st.m) * (gv - fv);
  }
  out.calib_lhs = -st.eta * simpson_uniform(integrand, f.spacing());

  out.energy_ordered = out.energy_f <= out.energy_g + 1e-12;
  out.calib_bounds_diff = out.calib_lhs >= out.energy_f - out.energy_g - 1e-10;
  out.calib_nonpositive = out.calib_lhs <= 1e-12;
  out.ok = out.energy_ordered && out.calib_bounds_diff && out.calib_nonpositive;
  return out;
}

std::vector<double> random_test_function(const JacobiDiscretization& jd, std::uint64_t seed) {
  Lcg64 rng(seed);
  const double a1 = rng.uniform(-1.0, 1.0);
  const double a2 = rng.uniform(-1.0, 1.0);
  const double a3 = rng.uniform(-1.0, 1.0);
  const std::size_t n = jd.size();
  const double len = jd.s.back() - jd.s.front();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double tau = (jd.s[i] - jd.s.front()) / len * std::numbers::pi;
    w[i] = a1 * std::sin(tau) + a2 * std::sin(2.0 * tau) + a3 * std::sin(3.0 * tau);
  }
  w.front() = 0.0;
  w.back() = 0.0;
  return w;
}

StabilityReport stability_report(const PlanarCurve& curve, const StationaryParams& st,
                                 int n_test_functions, std::uint64_t seed) {
  const JacobiDiscretization jd = jacobi_potential(curve, st);
  StabilityReport rep;
  rep.stationary_linf = jd.stationary_linf;
  rep.stationary_warning = jd.stationary_warning;
  rep.identity_residual = jacobi_identity_check(curve, st);
  rep.lambda_min = min_eigenvalue(jd);
  for (int k = 0; k < n_test_functions; ++k) {
    const auto w = random_test_function(jd, seed + static_cast<std::uint64_t>(k));
    rep.form_gap = std::max(rep.form_gap, second_variation_substituted(jd, w).form_gap);
  }
  return rep;
}

}  // namespace elastica
