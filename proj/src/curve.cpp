#include "elastica/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace elastica {

namespace {

// Three-point derivative on a possibly non-uniform grid, exact for quadratics.
double deriv3(double ym, double y0, double yp, double hm, double hp) {
  return (-hp / (hm * (hm + hp))) * ym + ((hp - hm) / (hm * hp)) * y0 +
         (hm / (hp * (hm + hp))) * yp;
}

std::vector<double> unwrap_angles(std::span<const double> theta) {
  std::vector<double> out(theta.begin(), theta.end());
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 1; i < out.size(); ++i) {
    double d = out[i] - out[i - 1];
    d -= two_pi * std::round(d / two_pi);
    out[i] = out[i - 1] + d;
  }
  return out;
}

// Slopes for Hermite interpolation: three-point interior, one-sided ends.
std::vector<double> hermite_slopes(std::span<const double> s, std::span<const double> y) {
  const std::size_t n = s.size();
  std::vector<double> m(n);
  for (std::size_t i = 1; i + 1 < n; ++i)
    m[i] = deriv3(y[i - 1], y[i], y[i + 1], s[i] - s[i - 1], s[i + 1] - s[i]);
  {
    const double h0 = s[1] - s[0], h1 = s[2] - s[1];
    const double d0 = (y[1] - y[0]) / h0, d1 = (y[2] - y[1]) / h1;
    m[0] = d0 - h0 * (d1 - d0) / (h0 + h1);
  }
  {
    const double h0 = s[n - 1] - s[n - 2], h1 = s[n - 2] - s[n - 3];
    const double d0 = (y[n - 1] - y[n - 2]) / h0, d1 = (y[n - 2] - y[n - 3]) / h1;
    m[n - 1] = d0 + h0 * (d0 - d1) / (h0 + h1);
  }
  return m;
}

// Cubic Hermite evaluation on [s_i, s_{i+1}]; t is the local coordinate.
double hermite_eval(double y0, double y1, double m0, double m1, double h, double t) {
  const double u = t / h;
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * h * m0 + (-2 * u3 + 3 * u2) * y1 +
         (u3 - u2) * h * m1;
}

}  // namespace

bool PlanarCurve::is_uniform(double rel) const {
  const double h = mean_spacing();
  for (std::size_t i = 1; i < s_.size(); ++i)
    if (std::abs((s_[i] - s_[i - 1]) - h) > rel * h) return false;
  return true;
}

PlanarCurve validate_curve(const RawCurveSamples& in, double tol_geom) {
  const std::size_t n = in.size();
  if (n < 5) fail(Errc::InvalidArgument, "curve needs at least 5 samples");
  if (in.x.size() != n || in.z.size() != n || in.theta.size() != n || in.kappa.size() != n)
    fail(Errc::InvalidArgument, "curve sample columns have mismatched lengths");

  for (std::size_t i = 1; i < n; ++i)
    if (!(in.s[i] > in.s[i - 1]))
      fail(Errc::NonMonotonicArcLength,
           "arc length not strictly increasing at sample " + std::to_string(i));

  const std::vector<double> theta_u = unwrap_angles(in.theta);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = in.s[i] - in.s[i - 1];
    const double hp = in.s[i + 1] - in.s[i];
    const double xd = deriv3(in.x[i - 1], in.x[i], in.x[i + 1], hm, hp);
    const double zd = deriv3(in.z[i - 1], in.z[i], in.z[i + 1], hm, hp);
    if (std::abs(xd - std::cos(in.theta[i])) > tol_geom ||
        std::abs(zd - std::sin(in.theta[i])) > tol_geom)
      fail(Errc::TangentInconsistent,
           "finite-difference tangent disagrees with theta at sample " + std::to_string(i));
    const double td = deriv3(theta_u[i - 1], theta_u[i], theta_u[i + 1], hm, hp);
    if (std::abs(td - in.kappa[i]) > tol_geom)
      fail(Errc::CurvatureInconsistent,
           "finite-difference theta' disagrees with kappa at sample " + std::to_string(i));
  }

  PlanarCurve c;
  c.tol_geom_ = tol_geom;
  c.s_ = in.s;
  c.x_ = in.x;
  c.z_ = in.z;
  c.theta_ = in.theta;
  c.kappa_ = in.kappa;
  c.nu2_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.nu2_[i] = std::cos(in.theta[i]);
  return c;
}

CylinderView cylinder_view(const PlanarCurve& curve, int n) {
  if (n < 1) fail(Errc::InvalidArgument, "cylinder_view needs n >= 1");
  CylinderView v;
  v.n = n;
  const auto kap = curve.kappa();
  v.H.resize(kap.size());
  v.A2.resize(kap.size());
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < kap.size(); ++i) {
    v.H[i] = kap[i] * inv_n;
    v.A2[i] = kap[i] * kap[i];
  }
  v.nu_vert.assign(curve.nu2().begin(), curve.nu2().end());
  return v;
}

PlanarCurve resample_uniform(const PlanarCurve& curve, double h, double tol_geom) {
  if (tol_geom < 0.0) tol_geom = curve.tol_geom();
  if (!(h > 0.0)) fail(Errc::InvalidArgument, "resample step must be positive");
  const double span = curve.length();
  if (h > span) fail(Errc::StepTooLarge, "resample step exceeds the curve extent");

  const auto s = curve.s();
  const std::size_t m = static_cast<std::size_t>(std::floor(span / h + 1e-9)) + 1;
  if (m < 5) fail(Errc::StepTooLarge, "resample step leaves fewer than 5 samples");

  // Node-preserving fast path: the grid already is s0 + i*h.
  if (curve.size() == m) {
    bool exact = true;
    for (std::size_t i = 0; i < m && exact; ++i)
      exact = std::abs(s[i] - (s[0] + static_cast<double>(i) * h)) <= 1e-12 * std::max(1.0, span);
    if (exact) return curve;
  }

  RawCurveSamples out;
  out.s.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.s[i] = s[0] + static_cast<double>(i) * h;

  const std::vector<double> theta_u = unwrap_angles(curve.theta());
  const std::array<std::span<const double>, 4> fields = {curve.x(), curve.z(),
                                                         std::span<const double>(theta_u),
                                                         curve.kappa()};
  std::array<std::vector<double>*, 4> targets = {&out.x, &out.z, &out.theta, &out.kappa};

  for (int f = 0; f < 4; ++f) {
    const auto y = fields[f];
    const auto slopes = hermite_slopes(s, y);
    auto& dst = *targets[f];
    dst.resize(m);
    std::size_t cell = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const double t = out.s[j];
      while (cell + 2 < s.size() && s[cell + 1] < t) ++cell;
      // Evaluating at a knot reproduces the stored value exactly.
      if (t == s[cell]) {
        dst[j] = y[cell];
      } else if (t == s[cell + 1]) {
        dst[j] = y[cell + 1];
      } else {
        dst[j] = hermite_eval(y[cell], y[cell + 1], slopes[cell], slopes[cell + 1],
                              s[cell + 1] - s[cell], t - s[cell]);
      }
    }
  }
  return validate_curve(out, tol_geom);
}

std::vector<double> GraphCurve::nu2() const {
  std::vector<double> out(fp.size());
  for (std::size_t i = 0; i < fp.size(); ++i) out[i] = 1.0 / std::sqrt(1.0 + fp[i] * fp[i]);
  return out;
}

void check_graph(const GraphCurve& g) {
  const std::size_t n = g.x.size();
  if (n < 5) fail(Errc::InvalidArgument, "graph needs at least 5 samples");
  if (g.f.size() != n || g.fp.size() != n)
    fail(Errc::InvalidArgument, "graph sample columns have mismatched lengths");
  if (!(g.x1 > g.x0)) fail(Errc::InvalidArgument, "graph domain is empty");
  const double h = g.spacing();
  for (std::size_t i = 0; i < n; ++i) {
    const double expect = g.x0 + static_cast<double>(i) * h;
    if (std::abs(g.x[i] - expect) > 1e-9 * std::max(1.0, std::abs(g.x1 - g.x0)))
      fail(Errc::InvalidArgument, "graph grid is not uniform");
  }
}

bool is_closed(const PlanarCurve& curve, double tol) {
  const auto x = curve.x();
  const auto z = curve.z();
  const auto th = curve.theta();
  const double dx = x.back() - x.front();
  const double dz = z.back() - z.front();
  if (std::hypot(dx, dz) > tol) return false;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double dth = th.back() - th.front();
  dth -= two_pi * std::round(dth / two_pi);
  return std::abs(dth) <= tol;
}

}  // namespace elastica
