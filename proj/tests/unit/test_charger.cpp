#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qbsim/charger.hpp"

using namespace qbsim;
using namespace qbsim::testing;
using namespace std::complex_literals;

TEST_SUITE("charger") {
  TEST_CASE("closed-form gates match the numeric exponential") {
    for (ChargeAxis axis : {ChargeAxis::X, ChargeAxis::Y}) {
      for (int k = 0; k <= 64; ++k) {
        const double phase = kPi * k / 64.0;
        const ComplexMatrix numeric = charging_unitary_numeric(axis, 1.0, phase).matrix;
        check_close(charging_unitary_closed(axis, phase).matrix, numeric, 1e-10);
        check_close(numeric, oracle::expm_taylor(charging_hamiltonian(axis, 1.0), -1i * phase), 1e-11);
      }
    }
  }

  TEST_CASE("each layout belongs to one generator only") {
    const double phase = 0.7;
    const ComplexMatrix ux = charging_unitary_numeric(ChargeAxis::X, 1.0, phase).matrix;
    const ComplexMatrix uy = charging_unitary_numeric(ChargeAxis::Y, 1.0, phase).matrix;
    CHECK(max_abs_diff(alpha_beta_lambda_layout(phase), ux) <= 1e-12);
    CHECK(max_abs_diff(alpha_theta_layout(phase), uy) <= 1e-12);
    CHECK(max_abs_diff(alpha_beta_lambda_layout(phase), uy) > 0.1);
    CHECK(max_abs_diff(alpha_theta_layout(phase), ux) > 0.1);
  }

  TEST_CASE("phase depends on omega t only") {
    check_close(charging_unitary_numeric(ChargeAxis::Y, 2.5, 0.4).matrix,
                charging_unitary_numeric(ChargeAxis::Y, 1.0, 1.0).matrix, 1e-12);
    CHECK(charging_unitary_numeric(ChargeAxis::Y, 2.5, 0.4).phase == doctest::Approx(1.0));
  }

  TEST_CASE("gates are unitary with period pi") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
      const double phase = u(rng);
      for (ChargeAxis axis : {ChargeAxis::X, ChargeAxis::Y}) {
        const ComplexMatrix m = charging_unitary_closed(axis, phase).matrix;
        check_close(m.adjoint() * m, ComplexMatrix::identity(4), 1e-12);
        check_close(charging_unitary_closed(axis, phase + kPi).matrix, m, 1e-12);
      }
    }
  }

  TEST_CASE("sigma y gate at a quarter period flips every spin") {
    const ComplexMatrix want{{0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, -1.0, 0.0}, {0.0, -1.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}};
    check_close(charging_unitary_numeric(ChargeAxis::Y, 1.0, kPi / 2).matrix, want, 1e-12);
  }

  TEST_CASE("charging Hamiltonian spectrum") {
    for (ChargeAxis axis : {ChargeAxis::X, ChargeAxis::Y}) {
      const Spectrum s = hermitian_eig(charging_hamiltonian(axis, 1.5));
      const double want[] = {-3.0, 0.0, 0.0, 3.0};
      for (std::size_t k = 0; k < 4; ++k) CHECK(s.values[k] == doctest::Approx(want[k]).epsilon(1e-12));
    }
  }

  TEST_CASE("evolution preserves the state spectrum") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
      ModelParams p = oracle::random_params(rng, 0.2, 2.0);
      p.axis = trial % 2 ? ChargeAxis::X : ChargeAxis::Y;
      const ChargingProtocol proto(p);
      const DensityMatrix rho = proto.charged_state(0.9);
      CHECK_NOTHROW(DensityMatrix{rho.matrix()});
      const auto before = hermitian_eig(proto.thermal().matrix()).values;
      const auto after = hermitian_eig(rho.matrix()).values;
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(before[k] - after[k]) <= 1e-12);
    }
  }

  TEST_CASE("two quarter periods equal one half period") {
    const ChargingUnitary q = charging_unitary_numeric(ChargeAxis::X, 1.0, kPi / 4);
    check_close(q.matrix * q.matrix, charging_unitary_numeric(ChargeAxis::X, 1.0, kPi / 2).matrix, 1e-12);
  }

  TEST_CASE("zero time leaves the thermal state unchanged") {
    const ChargingProtocol proto(ModelParams{});
    check_close(proto.charged_state(0.0).matrix(), proto.thermal().matrix(), 1e-15);
  }
}
