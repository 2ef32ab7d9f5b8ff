#pragma once

#include "qbsim/linalg.hpp"
#include "qbsim/spin_model.hpp"

namespace qbsim {

// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  // Validates all three invariants; throws InvalidState.
  explicit DensityMatrix(ComplexMatrix m);
  // Skips validation. For states produced by construction, e.g. U rho U^dagger.
  static DensityMatrix unchecked(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

struct ThermalAuxiliaries {
  double r_param = 0.0;  // R
  double e_param = 0.0;  // E
  cplx phi;              // Dz + iJ
  cplx chi;              // Gz + i gamma J
  double z = 0.0;        // closed-form partition function, +inf past double range
  double log_z = 0.0;    // overflow-free log Z
};

// Requires B = 1 (PreconditionB).
ThermalAuxiliaries thermal_auxiliaries(const ModelParams& p);

// exp(-H/T) / Z, evaluated with the spectrum shifted by its minimum.
DensityMatrix gibbs_state(const ComplexMatrix& h, double temperature);
DensityMatrix gibbs_state(const Spectrum& s, double temperature);

enum class GibbsElements {
  AsPrinted,   // rho33 carries + sqrt2 sinh(R/T) cos(theta - pi/4) / R
  Corrected,   // rho33 carries - sqrt2 sinh(R/T) sin(theta - pi/4) / R
};

// The X-shaped thermal matrix assembled from the closed-form elements over the
// closed-form Z. Returned as a bare matrix: the printed elements need not form
// a valid state. Requires B = 1 (PreconditionB).
ComplexMatrix gibbs_closed_form(const ModelParams& p, GibbsElements form = GibbsElements::AsPrinted);

double partition_function(const ComplexMatrix& h, double temperature);
double log_partition_function(const ComplexMatrix& h, double temperature);
// 2{cosh(D/T)[cosh(E/T) + cosh(R/T)] + sinh(D/T)[cosh(R/T) - cosh(E/T)]}
double partition_function_closed_form(const ModelParams& p);

bool is_passive(const DensityMatrix& rho, const ComplexMatrix& h);
bool is_passive(const DensityMatrix& rho, const Spectrum& s);

}  // namespace qbsim
