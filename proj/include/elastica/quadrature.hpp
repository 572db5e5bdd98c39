#pragma once

#include <span>

namespace elastica {

/// Compensated (Kahan) accumulator. The quadrature and norm reductions are
/// kept serial and compensated so results do not depend on thread count and
/// energy differences between nearby integrands survive cancellation.
class KahanSum {
 public:
  void add(double x) {
    double y = x - carry_;
    double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Composite Simpson rule for samples y on a uniform grid of spacing h.
/// An odd interval count is handled with a 3/8 rule on the final three
/// intervals; y.size() must be at least 3.
double simpson_uniform(std::span<const double> y, double h);

}  // namespace elastica
