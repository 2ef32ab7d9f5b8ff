#include "qbsim/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "qbsim/constants.hpp"
#include "qbsim/error.hpp"

namespace qbsim {

Maximum maximize_scan_golden(const std::function<double(double)>& f, double lo, double hi, int points,
                             double x_tol) {
  if (!(hi >= lo)) throw Error(ErrorCode::InvalidParams, "empty maximization window");
  if (hi == lo) return {lo, f(lo)};
  points = std::max(points, 3);
  const double step = (hi - lo) / (points - 1);
  Maximum best{lo, f(lo)};
  int best_k = 0;
  for (int k = 1; k < points; ++k) {
    const double x = k == points - 1 ? hi : lo + k * step;
    const double v = f(x);
    if (v > best.value) {
      best = {x, v};
      best_k = k;
    }
  }

  double a = best_k == 0 ? lo : lo + (best_k - 1) * step;
  double b = best_k == points - 1 ? hi : lo + (best_k + 1) * step;
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < tol::kGoldenMaxIterations && b - a > x_tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  const double vm = f(xm);
  if (vm > best.value) best = {xm, vm};
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

}  // namespace qbsim
