#include "qbsim/charger.hpp"

#include <cmath>

#include "qbsim/error.hpp"

namespace qbsim {

ComplexMatrix charging_hamiltonian(ChargeAxis axis, double omega) {
  const ComplexMatrix s = pauli(axis == ChargeAxis::X ? PauliAxis::X : PauliAxis::Y);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return omega * (kron(s, id) + kron(id, s));
}

ChargingUnitary charging_unitary_numeric(ChargeAxis axis, double omega, double t) {
  return ChargingPropagator(axis, omega).at(t);
}

ComplexMatrix alpha_beta_lambda_layout(double phase) {
  using namespace std::complex_literals;
  const double c = std::cos(phase), s = std::sin(phase);
  const cplx a = c * c, b = -s * s, l = -0.5i * std::sin(2.0 * phase);
  return {{a, l, l, b}, {l, a, b, l}, {l, b, a, l}, {b, l, l, a}};
}

ComplexMatrix alpha_theta_layout(double phase) {
  const double c = std::cos(phase);
  const cplx a = c * c;
  const cplx tp = 0.5 * std::sin(2.0 * phase), tm = -tp;
  return {{a, tm, tm, 1.0 - a}, {tp, a, a - 1.0, tm}, {tp, a - 1.0, a, tm}, {1.0 - a, tp, tp, a}};
}

ChargingUnitary charging_unitary_closed(ChargeAxis axis, double phase) {
  return {axis == ChargeAxis::X ? alpha_beta_lambda_layout(phase) : alpha_theta_layout(phase), axis, phase};
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "evolve: unitary and state differ in size");
  return DensityMatrix::unchecked(u * rho.matrix() * u.adjoint());
}

DensityMatrix evolve(const DensityMatrix& rho, const ChargingUnitary& u) { return evolve(rho, u.matrix); }

ChargingPropagator::ChargingPropagator(ChargeAxis axis, double omega)
    : axis_(axis), omega_(omega), spectrum_(hermitian_eig(charging_hamiltonian(axis, omega))) {}

ChargingUnitary ChargingPropagator::at(double t) const {
  std::vector<cplx> d(spectrum_.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::exp(cplx(0.0, -t * spectrum_.values[k]));
  return {reconstruct(spectrum_, d), axis_, omega_ * t};
}

ChargingProtocol::ChargingProtocol(const ModelParams& p)
    : params_(p),
      h_(build_qb_hamiltonian(p)),
      spectrum_(hermitian_eig(h_)),
      thermal_(gibbs_state(spectrum_, p.temperature)),
      thermal_energy_(trace_product(thermal_.matrix(), h_).real()),
      propagator_(p.axis, p.omega) {}

DensityMatrix ChargingProtocol::charged_state(double t) const { return evolve(thermal_, propagator_.at(t)); }

}  // namespace qbsim
