#include "elastica/quadrature.hpp"

#include "elastica/error.hpp"

namespace elastica {

double simpson_uniform(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 3) fail(Errc::InvalidArgument, "simpson_uniform needs at least 3 samples");
  std::size_t intervals = n - 1;

  // Peel an odd tail off with the 3/8 rule so the main loop is plain Simpson.
  std::size_t main_intervals = intervals;
  bool tail38 = false;
  if (intervals % 2 != 0) {
    if (intervals < 3) fail(Errc::InvalidArgument, "simpson_uniform needs >= 3 intervals when odd");
    main_intervals = intervals - 3;
    tail38 = true;
  }

  KahanSum acc;
  if (main_intervals >= 2) {
    acc.add(y[0]);
    acc.add(y[main_intervals]);
    for (std::size_t i = 1; i < main_intervals; i += 2) acc.add(4.0 * y[i]);
    for (std::size_t i = 2; i < main_intervals; i += 2) acc.add(2.0 * y[i]);
  }
  double total = acc.value() * (h / 3.0);
  if (tail38) {
    const std::size_t b = main_intervals;
    total += (3.0 * h / 8.0) * (y[b] + 3.0 * y[b + 1] + 3.0 * y[b + 2] + y[b + 3]);
  }
  return total;
}

}  // namespace elastica
