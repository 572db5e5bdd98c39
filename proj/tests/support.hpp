#pragma once

// Analytic fixtures shared by the unit and acceptance tests. Everything here
// is closed form (or high-order quadrature of closed-form data) so the tests
// have oracles independent of the library's solvers.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "elastica/curve.hpp"

namespace fixtures {

inline constexpr double kPi = std::numbers::pi;

/// Catenary z = cosh(x) sampled at uniform arc length measured from the apex:
/// x = asinh(s), z = sqrt(1+s^2), theta = atan(s), kappa = 1/(1+s^2).
inline elastica::RawCurveSamples catenary_raw(double s0, double s1, std::size_t n) {
  elastica::RawCurveSamples raw;
  const double h = (s1 - s0) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = s0 + static_cast<double>(i) * h;
    raw.s.push_back(s);
    raw.x.push_back(std::asinh(s));
    raw.z.push_back(std::sqrt(1.0 + s * s));
    raw.theta.push_back(std::atan(s));
    raw.kappa.push_back(1.0 / (1.0 + s * s));
  }
  return raw;
}

inline elastica::PlanarCurve catenary_curve(double s0, double s1, std::size_t n,
                                            double tol = elastica::kDefaultGeomTol) {
  return elastica::validate_curve(catenary_raw(s0, s1, n), tol);
}

/// Parabola z = x^2 + 1/4 sampled at uniform x; the arc length is closed
/// form: s(x) = x sqrt(1+4x^2)/2 + asinh(2x)/4.
inline elastica::PlanarCurve parabola_curve(double x0, double x1, std::size_t n) {
  elastica::RawCurveSamples raw;
  const double hx = (x1 - x0) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x0 + static_cast<double>(i) * hx;
    const double w = std::sqrt(1.0 + 4.0 * x * x);
    raw.s.push_back(0.5 * x * w + 0.25 * std::asinh(2.0 * x));
    raw.x.push_back(x);
    raw.z.push_back(x * x + 0.25);
    raw.theta.push_back(std::atan(2.0 * x));
    raw.kappa.push_back(2.0 / (w * w * w));
  }
  return elastica::validate_curve(raw);
}

/// Counter-clockwise circle of radius r about (cx, cz): kappa = +1/r, the
/// curve normal points inward.
inline elastica::PlanarCurve circle_ccw(double cx, double cz, double r, std::size_t n) {
  elastica::RawCurveSamples raw;
  const double dt = 2.0 * kPi / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    raw.s.push_back(r * t);
    raw.x.push_back(cx + r * std::cos(t));
    raw.z.push_back(cz + r * std::sin(t));
    raw.theta.push_back(t + kPi / 2.0);
    raw.kappa.push_back(1.0 / r);
  }
  return elastica::validate_curve(raw);
}

/// Clockwise circle: kappa = -1/r, the curve normal points outward. This is
/// the orientation whose enclosed-domain flux integrals come out positive.
inline elastica::PlanarCurve circle_cw(double cx, double cz, double r, std::size_t n) {
  elastica::RawCurveSamples raw;
  const double dt = 2.0 * kPi / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    raw.s.push_back(r * t);
    raw.x.push_back(cx + r * std::sin(t));
    raw.z.push_back(cz + r * std::cos(t));
    raw.theta.push_back(-t);
    raw.kappa.push_back(-1.0 / r);
  }
  return elastica::validate_curve(raw);
}

/// Horizontal segment z = height from x0 to x1.
inline elastica::PlanarCurve flat_line(double x0, double x1, double height, std::size_t n) {
  elastica::RawCurveSamples raw;
  const double h = (x1 - x0) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x0 + static_cast<double>(i) * h;
    raw.s.push_back(x - x0);
    raw.x.push_back(x);
    raw.z.push_back(height);
    raw.theta.push_back(0.0);
    raw.kappa.push_back(0.0);
  }
  return elastica::validate_curve(raw);
}

/// Arc-length samples of a generic graph z = f(x) from callables for f, f'
/// and f''; s is accumulated with per-interval 5-point Gauss quadrature.
inline elastica::PlanarCurve graph_curve(const std::function<double(double)>& f,
                                         const std::function<double(double)>& fp,
                                         const std::function<double(double)>& fpp, double x0,
                                         double x1, std::size_t n) {
  static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
  static const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                               0.4786286704993665, 0.2369268850561891};
  elastica::RawCurveSamples raw;
  const double hx = (x1 - x0) / static_cast<double>(n - 1);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x0 + static_cast<double>(i) * hx;
    if (i > 0) {
      const double a = x - hx, mid = x - 0.5 * hx, half = 0.5 * hx;
      (void)a;
      double acc = 0.0;
      for (int k = 0; k < 5; ++k) {
        const double xx = mid + half * gx[k];
        acc += gw[k] * std::hypot(1.0, fp(xx));
      }
      s += half * acc;
    }
    const double slope = fp(x);
    const double w = std::hypot(1.0, slope);
    raw.s.push_back(s);
    raw.x.push_back(x);
    raw.z.push_back(f(x));
    raw.theta.push_back(std::atan(slope));
    raw.kappa.push_back(fpp(x) / (w * w * w));
  }
  return elastica::validate_curve(raw);
}

/// Uniform graph fixture for the energy/stability tests.
inline elastica::GraphCurve make_graph(const std::function<double(double)>& f,
                                       const std::function<double(double)>& fp, double x0,
                                       double x1, std::size_t n) {
  elastica::GraphCurve g;
  g.x0 = x0;
  g.x1 = x1;
  const double hx = (x1 - x0) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x0 + static_cast<double>(i) * hx;
    g.x.push_back(x);
    g.f.push_back(f(x));
    g.fp.push_back(fp(x));
  }
  return g;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace fixtures
