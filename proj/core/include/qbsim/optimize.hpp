#pragma once

#include <functional>

namespace qbsim {

struct Maximum {
  double x = 0.0;
  double value = 0.0;
};

// Uniform scan of `points` samples over [lo, hi] (both ends included), then
// golden-section refinement inside the bracket around the best sample until
// the bracket is narrower than `x_tol`. Never returns less than the best sample.
Maximum maximize_scan_golden(const std::function<double(double)>& f, double lo, double hi, int points,
                             double x_tol);

}  // namespace qbsim
