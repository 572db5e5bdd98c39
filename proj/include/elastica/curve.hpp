#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "elastica/error.hpp"

namespace elastica {

/// Default absolute tolerance for the finite-difference consistency checks
/// run by validate_curve.
inline constexpr double kDefaultGeomTol = 1e-6;

/// Unvalidated curve samples as read from disk or assembled by a caller.
struct RawCurveSamples {
  std::vector<double> s;      ///< arc length, strictly increasing
  std::vector<double> x;      ///< horizontal coordinate
  std::vector<double> z;      ///< height coordinate
  std::vector<double> theta;  ///< tangent angle (radians)
  std::vector<double> kappa;  ///< curvature

  std::size_t size() const { return s.size(); }
};

/// Arc-length-sampled planar curve. Immutable once validated: the tangent
/// angle, curvature and coordinates have passed the finite-difference
/// consistency checks, and nu2 = cos(theta) (vertical normal component for
/// the normal taken as the +pi/2 rotation of the tangent) is precomputed.
class PlanarCurve {
 public:
  std::size_t size() const { return s_.size(); }

  std::span<const double> s() const { return s_; }
  std::span<const double> x() const { return x_; }
  std::span<const double> z() const { return z_; }
  std::span<const double> theta() const { return theta_; }
  std::span<const double> kappa() const { return kappa_; }
  std::span<const double> nu2() const { return nu2_; }

  double length() const { return s_.back() - s_.front(); }

  /// True when the s-grid is uniform to within `rel` of the mean spacing.
  bool is_uniform(double rel = 1e-9) const;

  /// Mean sample spacing.
  double mean_spacing() const { return length() / static_cast<double>(size() - 1); }

  /// Tolerance this curve was validated at; derived curves (resampling)
  /// re-validate at the same tolerance.
  double tol_geom() const { return tol_geom_; }

  RawCurveSamples raw() const { return {s_, x_, z_, theta_, kappa_}; }

  friend PlanarCurve validate_curve(const RawCurveSamples& samples, double tol_geom);

 private:
  PlanarCurve() = default;

  std::vector<double> s_, x_, z_, theta_, kappa_, nu2_;
  double tol_geom_ = kDefaultGeomTol;
};

/// Checks the arc-length/tangent/curvature consistency invariants at
/// tolerance tol_geom and returns the validated curve. At least 5 samples.
PlanarCurve validate_curve(const RawCurveSamples& samples, double tol_geom = kDefaultGeomTol);

/// Unit tangent and unit normal for tangent angle theta. The normal is the
/// counter-clockwise (+pi/2) rotation of the tangent.
struct Frame {
  std::array<double, 2> T;
  std::array<double, 2> N;
};
inline Frame frenet(double theta_rad) {
  const double c = std::cos(theta_rad), s = std::sin(theta_rad);
  return {{c, s}, {-s, c}};
}

/// Per-sample mean-curvature data of the cylinder over a generating curve:
/// H = kappa/n, |A|^2 = kappa^2, and the vertical normal component.
struct CylinderView {
  int n = 1;
  std::vector<double> H;
  std::vector<double> A2;
  std::vector<double> nu_vert;
};
CylinderView cylinder_view(const PlanarCurve& curve, int n);

/// Resamples onto a uniform arc-length grid with spacing h using piecewise
/// cubic Hermite interpolation (C^1, three-point slopes); theta is unwrapped
/// first. The result is re-validated at the input curve's tolerance (or
/// tol_geom when nonnegative). Throws StepTooLarge when h exceeds the curve
/// extent or leaves fewer than 5 samples.
PlanarCurve resample_uniform(const PlanarCurve& curve, double h, double tol_geom = -1.0);

/// Non-parametric curve z = f(x) on a uniform grid, with slopes.
struct GraphCurve {
  double x0 = 0.0;
  double x1 = 1.0;
  std::vector<double> x;   ///< uniform grid from x0 to x1
  std::vector<double> f;   ///< heights
  std::vector<double> fp;  ///< slopes

  std::size_t size() const { return x.size(); }
  double spacing() const { return (x1 - x0) / static_cast<double>(x.size() - 1); }

  /// Vertical normal component 1/sqrt(1 + fp^2) for the upward orientation.
  std::vector<double> nu2() const;
};

/// Basic structural checks (uniform ordered grid, matching sizes).
void check_graph(const GraphCurve& g);

/// True when the curve endpoints coincide in position and tangent angle
/// modulo 2*pi within `tol`.
bool is_closed(const PlanarCurve& curve, double tol = 1e-8);

}  // namespace elastica
