#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "elastica/kernels.hpp"

using namespace elastica;

namespace {

// Large enough to clear the parallel-dispatch grain.
constexpr std::size_t kN = 200'000;

struct Arrays {
  std::vector<double> s, z, nu2, kappa;
};

Arrays catenary_arrays(std::size_t n) {
  Arrays a;
  a.s.resize(n);
  a.z.resize(n);
  a.nu2.resize(n);
  a.kappa.resize(n);
  const double h = 4.0 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = -2.0 + static_cast<double>(i) * h;
    a.s[i] = s;
    a.z[i] = std::sqrt(1.0 + s * s);
    a.nu2[i] = 1.0 / a.z[i];
    a.kappa[i] = 1.0 / (1.0 + s * s);
  }
  return a;
}

bool identical(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  const Arrays a = catenary_arrays(kN);
  std::vector<double> p1(kN), p2(kN);

  SUBCASE("singular residual") {
    kernels::singular_residual_map(a.kappa, a.nu2, a.z, 1.3, 0.2, p1);
    kernels::singular_residual_map_ref(a.kappa, a.nu2, a.z, 1.3, 0.2, p2);
    CHECK(identical(p1, p2));
  }
  SUBCASE("stationary residual") {
    kernels::stationary_residual_map(a.kappa, a.z, 0.9, -2.0, 0.1, p1);
    kernels::stationary_residual_map_ref(a.kappa, a.z, 0.9, -2.0, 0.1, p2);
    CHECK(identical(p1, p2));
  }
  SUBCASE("density map") {
    const LagrangianKind kind = PowerLagrangian{0.5, 0.0, 0.3};
    std::vector<double> q1(kN), q2(kN);
    kernels::lagrangian_map(kind, a.kappa, p1, q1);
    kernels::lagrangian_map_ref(kind, a.kappa, p2, q2);
    CHECK(identical(p1, p2));
    CHECK(identical(q1, q2));
  }
  SUBCASE("second difference and elastic residual") {
    std::vector<double> d1(kN - 2), d2(kN - 2);
    kernels::second_difference_map(a.z, 1e-3, d1);
    kernels::second_difference_map_ref(a.z, 1e-3, d2);
    CHECK(identical(d1, d2));

    const LagrangianKind kind = ExpLagrangian{0.4};
    std::vector<double> P(kN), Pd(kN);
    kernels::lagrangian_map(kind, a.kappa, P, Pd);
    kernels::elastic_residual_map(a.kappa, P, Pd, 1e-3, d1);
    kernels::elastic_residual_map_ref(a.kappa, P, Pd, 1e-3, d2);
    CHECK(identical(d1, d2));
  }
  SUBCASE("jacobi potential") {
    kernels::jacobi_potential_map(a.kappa, a.z, a.nu2, 1.0, -2.0, p1);
    kernels::jacobi_potential_map_ref(a.kappa, a.z, a.nu2, 1.0, -2.0, p2);
    CHECK(identical(p1, p2));
  }
  SUBCASE("fourth-order derivative") {
    kernels::derivative4_map(a.z, 1e-3, p1);
    kernels::derivative4_map_ref(a.z, 1e-3, p2);
    CHECK(identical(p1, p2));
  }
}

TEST_CASE("elastic residual kernel composes stencil and algebra") {
  const Arrays a = catenary_arrays(4096);
  const LagrangianKind kind = PowerLagrangian{0.5, 0.0, 0.0};
  const double h = a.s[1] - a.s[0];
  std::vector<double> P(a.kappa.size()), Pd(a.kappa.size());
  kernels::lagrangian_map_ref(kind, a.kappa, P, Pd);
  std::vector<double> dd(a.kappa.size() - 2), r(a.kappa.size() - 2);
  kernels::second_difference_map_ref(Pd, h, dd);
  kernels::elastic_residual_map_ref(a.kappa, P, Pd, h, r);
  for (std::size_t i = 1; i + 1 < a.kappa.size(); ++i) {
    const double expect = dd[i - 1] + a.kappa[i] * a.kappa[i] * Pd[i] - a.kappa[i] * P[i];
    CHECK(r[i - 1] == expect);
  }
}

TEST_CASE("fourth-order derivative is exact on quartics") {
  const std::size_t n = 101;
  const double h = 0.01;
  std::vector<double> f(n), expect(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) * h;
    f[i] = ((x - 0.3) * x + 0.2) * x * x + 1.0;        // quartic
    expect[i] = ((4.0 * x - 0.9) * x + 0.4) * x;       // its derivative
  }
  std::vector<double> d(n);
  kernels::derivative4_map_ref(f, h, d);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(d[i] == doctest::Approx(expect[i]).epsilon(1e-11));
}
