#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qbsim/error.hpp"
#include "qbsim/thermal.hpp"

using namespace qbsim;
using namespace qbsim::testing;

TEST_SUITE("thermal") {
  TEST_CASE("Gibbs state matches the Taylor-series oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.2, 3.0);
      const ComplexMatrix h = build_qb_hamiltonian(p);
      check_close(gibbs_state(h, p.temperature).matrix(), oracle::gibbs_taylor(h, p.temperature), 1e-10);
    }
  }

  TEST_CASE("zero Hamiltonian gives the maximally mixed state") {
    const ComplexMatrix mixed = 0.25 * ComplexMatrix::identity(4);
    check_close(gibbs_state(ComplexMatrix(4), 1.0).matrix(), mixed, 1e-15);
    check_close(gibbs_state(build_qb_hamiltonian(ModelParams{}), 1e8).matrix(), mixed, 1e-7);
  }

  TEST_CASE("populations follow Boltzmann weights in the eigenbasis") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.1, 2.0);
      const Spectrum s = hermitian_eig(build_qb_hamiltonian(p));
      const DensityMatrix rho = gibbs_state(s, p.temperature);
      const ComplexMatrix d = s.vectors.adjoint() * rho.matrix() * s.vectors;
      const double z = oracle::partition_sum(s.values, p.temperature);
      for (std::size_t k = 0; k < 4; ++k)
        CHECK(d(k, k).real() == doctest::Approx(std::exp(-s.values[k] / p.temperature) / z).epsilon(1e-10));
    }
  }

  TEST_CASE("Gibbs state is invariant under energy shifts") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const ModelParams p = oracle::random_params(rng);
      const ComplexMatrix h = build_qb_hamiltonian(p);
      const ComplexMatrix shifted = h + 37.5 * ComplexMatrix::identity(4);
      check_close(gibbs_state(h, p.temperature).matrix(), gibbs_state(shifted, p.temperature).matrix(), 1e-12);
    }
  }

  TEST_CASE("Gibbs state is a valid passive state") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.01, 5.0);
      const ComplexMatrix h = build_qb_hamiltonian(p);
      const DensityMatrix rho = gibbs_state(h, p.temperature);
      CHECK_NOTHROW(DensityMatrix{rho.matrix()});
      CHECK(is_passive(rho, h));
    }
  }

  TEST_CASE("an inverted population is not passive") {
    const double nu[] = {-1.0, 0.0, 1.0, 2.0};
    const double pop[] = {0.1, 0.2, 0.3, 0.4};
    const DensityMatrix rho{ComplexMatrix::diagonal(pop)};
    CHECK_FALSE(is_passive(rho, ComplexMatrix::diagonal(nu)));
  }

  TEST_CASE("density matrix validation") {
    const double neg[] = {1.2, -0.2, 0.0, 0.0};
    CHECK_THROWS_AS(DensityMatrix{ComplexMatrix::diagonal(neg)}, Error);
    const double half[] = {0.25, 0.25, 0.0, 0.0};
    CHECK_THROWS_AS(DensityMatrix{ComplexMatrix::diagonal(half)}, Error);
  }

  TEST_CASE("closed-form partition function matches the spectral sum") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 100; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.1, 3.0);
      const ComplexMatrix h = build_qb_hamiltonian(p);
      const double z = oracle::partition_sum(oracle::eigenvalues(h), p.temperature);
      CHECK(partition_function_closed_form(p) == doctest::Approx(z).epsilon(1e-9));
      CHECK(partition_function(h, p.temperature) == doctest::Approx(z).epsilon(1e-9));
      CHECK(thermal_auxiliaries(p).log_z == doctest::Approx(std::log(z)).epsilon(1e-10));
    }
  }

  TEST_CASE("log Z stays finite where Z overflows") {
    ModelParams p;
    p.j = 1.0;
    p.dz = 400.0;
    p.temperature = 1.0;
    const double log_z = thermal_auxiliaries(p).log_z;
    CHECK(std::isfinite(log_z));
    CHECK(log_z == doctest::Approx(log_partition_function(build_qb_hamiltonian(p), 1.0)).epsilon(1e-12));
  }

  TEST_CASE("closed-form radicands are non-negative") {
    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
      ModelParams p;
      p.j = u(rng);
      p.gamma = u(rng);
      p.dz = u(rng);
      p.gz = u(rng);
      p.theta = std::abs(u(rng)) * kPi / 20.0;
      const double s2 = std::sin(2.0 * p.theta);
      CHECK(4 * p.dz * p.dz - s2 + 4 * p.j * p.j + 1 >= 0.0);
      CHECK(1 + 4 * p.gz * p.gz + 4 * p.j * p.j * p.gamma * p.gamma + s2 >= 0.0);
    }
  }

  TEST_CASE("corrected closed-form elements reproduce the numeric state") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 100; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.05, 3.0);
      const DensityMatrix rho = gibbs_state(build_qb_hamiltonian(p), p.temperature);
      check_close(gibbs_closed_form(p, GibbsElements::Corrected), rho.matrix(), 1e-9);
    }
  }

  TEST_CASE("printed elements differ from the numeric state only in rho33") {
    std::mt19937_64 rng(28);
    for (int trial = 0; trial < 50; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.05, 3.0);
      const ComplexMatrix printed = gibbs_closed_form(p, GibbsElements::AsPrinted);
      const ComplexMatrix rho = gibbs_state(build_qb_hamiltonian(p), p.temperature).matrix();
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (i != 2 || j != 2) CHECK(std::abs(printed(i, j) - rho(i, j)) <= 1e-9);
    }
    // at theta = pi/2 the printed rho33 carries the wrong sign of the sinh term
    ModelParams p;
    p.gamma = 0.5;
    p.delta = 0.5;
    p.theta = kPi / 2;
    const double printed = gibbs_closed_form(p).operator()(2, 2).real();
    const double numeric = gibbs_state(build_qb_hamiltonian(p), p.temperature)(2, 2).real();
    CHECK(std::abs(printed - numeric) > 0.1);
  }

  TEST_CASE("equal site fields give equal middle populations") {
    ModelParams p;
    p.gamma = 0.3;
    p.delta = 0.2;
    p.theta = kPi / 4;
    const DensityMatrix rho = gibbs_state(build_qb_hamiltonian(p), p.temperature);
    CHECK(rho(1, 1).real() == doctest::Approx(rho(2, 2).real()).epsilon(1e-12));
  }

  TEST_CASE("closed forms require unit field") {
    ModelParams p;
    p.b = 2.0;
    try {
      gibbs_closed_form(p);
      FAIL("expected PreconditionB");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PreconditionB);
    }
    CHECK_THROWS_AS(thermal_auxiliaries(p), Error);
  }

  TEST_CASE("thermal energy equals the spectral average") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.1, 2.0);
      const ComplexMatrix h = build_qb_hamiltonian(p);
      const auto nu = oracle::eigenvalues(h);
      const double z = oracle::partition_sum(nu, p.temperature);
      double avg = 0.0;
      for (double v : nu) avg += v * std::exp(-v / p.temperature) / z;
      CHECK(trace_product(gibbs_state(h, p.temperature).matrix(), h).real() == doctest::Approx(avg).epsilon(1e-10));
    }
  }
}
