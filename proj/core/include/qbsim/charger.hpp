#pragma once

#include "qbsim/linalg.hpp"
#include "qbsim/spin_model.hpp"
#include "qbsim/thermal.hpp"

namespace qbsim {

struct ChargingUnitary {
  ComplexMatrix matrix;
  ChargeAxis axis = ChargeAxis::Y;
  double phase = 0.0;  // Omega * t
};

// Omega (sigma_axis x I + I x sigma_axis)
ComplexMatrix charging_hamiltonian(ChargeAxis axis, double omega);

// exp(-i H_C t)
ChargingUnitary charging_unitary_numeric(ChargeAxis axis, double omega, double t);

// Closed-form gate for the given generator. The sigma_x gate has the
// (alpha, beta, lambda) layout and the sigma_y gate the (alpha, theta+-, 1-alpha)
// layout; typeset sources attach these layouts to the opposite axes.
ChargingUnitary charging_unitary_closed(ChargeAxis axis, double phase);

// alpha = cos^2, beta = -sin^2, lambda = -(i/2) sin(2 phase)
ComplexMatrix alpha_beta_lambda_layout(double phase);
// alpha = cos^2, theta+- = +-(1/2) sin(2 phase), entries 1 - alpha and alpha - 1
ComplexMatrix alpha_theta_layout(double phase);

// U rho U^dagger
DensityMatrix evolve(const DensityMatrix& rho, const ChargingUnitary& u);
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u);

// Reuses the diagonalized charging Hamiltonian across many times.
class ChargingPropagator {
 public:
  ChargingPropagator(ChargeAxis axis, double omega);
  ChargingUnitary at(double t) const;

 private:
  ChargeAxis axis_;
  double omega_;
  Spectrum spectrum_;
};

// Battery Hamiltonian, its spectrum, the thermal state and the charger for one
// parameter point. Everything time-independent is computed once.
class ChargingProtocol {
 public:
  explicit ChargingProtocol(const ModelParams& p);

  const ModelParams& params() const noexcept { return params_; }
  const ComplexMatrix& hamiltonian() const noexcept { return h_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const DensityMatrix& thermal() const noexcept { return thermal_; }
  double thermal_energy() const noexcept { return thermal_energy_; }

  DensityMatrix charged_state(double t) const;

 private:
  ModelParams params_;
  ComplexMatrix h_;
  Spectrum spectrum_;
  DensityMatrix thermal_;
  double thermal_energy_ = 0.0;
  ChargingPropagator propagator_;
};

}  // namespace qbsim
