#pragma once

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qbsim/linalg.hpp"

namespace qbsim::testing {

inline constexpr double kPi = std::numbers::pi;

inline void check_close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  REQUIRE(a.dim() == b.dim());
  CHECK(max_abs_diff(a, b) <= tol);
}

}  // namespace qbsim::testing
