// Timing comparison of the OpenMP kernels against their serial reference
// twins on a large synthetic curve. Build target: kernel_bench (not a test).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "elastica/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_of(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class Fn>
double best_of(int reps, const Fn& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, seconds_of(t0, Clock::now()));
  }
  return best;
}

void report(const std::string& name, double serial, double parallel, std::size_t n) {
  std::printf("%-24s %10.4f ms %10.4f ms   %5.2fx   %7.2f Msamples/s\n", name.c_str(),
              serial * 1e3, parallel * 1e3, serial / parallel,
              static_cast<double>(n) / parallel / 1e6);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = 8'000'000;
  if (argc > 1) n = static_cast<std::size_t>(std::stoull(argv[1]));
  const int reps = 5;

  // Catenary samples at uniform arc length: z = sqrt(1+s^2), kappa = 1/z^2.
  std::vector<double> s(n), z(n), nu2(n), kappa(n);
  const double h = 4.0 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = -2.0 + static_cast<double>(i) * h;
    z[i] = std::sqrt(1.0 + s[i] * s[i]);
    nu2[i] = 1.0 / z[i];
    kappa[i] = 1.0 / (z[i] * z[i]);
  }

#ifdef _OPENMP
  std::printf("OpenMP threads: %d, n = %zu\n", omp_get_max_threads(), n);
#else
  std::printf("OpenMP disabled, n = %zu\n", n);
#endif
  std::printf("%-24s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

  using namespace elastica;
  std::vector<double> out_a(n), out_b(n), out_c(n >= 2 ? n - 2 : 0);

  {
    const double ts = best_of(reps, [&] {
      kernels::singular_residual_map_ref(kappa, nu2, z, 1.0, 0.0, out_a);
    });
    const double tp = best_of(reps, [&] {
      kernels::singular_residual_map(kappa, nu2, z, 1.0, 0.0, out_b);
    });
    report("singular_residual_map", ts, tp, n);
  }
  {
    const double ts = best_of(reps, [&] {
      kernels::stationary_residual_map_ref(kappa, z, 1.0, -2.0, 0.0, out_a);
    });
    const double tp = best_of(reps, [&] {
      kernels::stationary_residual_map(kappa, z, 1.0, -2.0, 0.0, out_b);
    });
    report("stationary_residual_map", ts, tp, n);
  }
  {
    const LagrangianKind kind = PowerLagrangian{0.5, 0.0, 0.0};
    const double ts =
        best_of(reps, [&] { kernels::lagrangian_map_ref(kind, kappa, out_a, out_b); });
    std::vector<double> P(n), Pd(n);
    const double tp = best_of(reps, [&] { kernels::lagrangian_map(kind, kappa, P, Pd); });
    report("lagrangian_map", ts, tp, n);

    const double ts2 = best_of(reps, [&] {
      kernels::elastic_residual_map_ref(kappa, P, Pd, h, out_c);
    });
    const double tp2 = best_of(reps, [&] {
      kernels::elastic_residual_map(kappa, P, Pd, h, out_c);
    });
    report("elastic_residual_map", ts2, tp2, n);
  }
  {
    const double ts = best_of(reps, [&] {
      kernels::jacobi_potential_map_ref(kappa, z, nu2, 1.0, -2.0, out_a);
    });
    const double tp = best_of(reps, [&] {
      kernels::jacobi_potential_map(kappa, z, nu2, 1.0, -2.0, out_b);
    });
    report("jacobi_potential_map", ts, tp, n);
  }
  {
    const double ts = best_of(reps, [&] { kernels::derivative4_map_ref(z, h, out_a); });
    const double tp = best_of(reps, [&] { kernels::derivative4_map(z, h, out_b); });
    report("derivative4_map", ts, tp, n);
  }
  {
    const double ts = best_of(reps, [&] { kernels::second_difference_map_ref(z, h, out_c); });
    const double tp = best_of(reps, [&] { kernels::second_difference_map(z, h, out_c); });
    report("second_difference_map", ts, tp, n);
  }
  return 0;
}
