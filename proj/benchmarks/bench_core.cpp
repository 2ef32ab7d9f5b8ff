#include <benchmark/benchmark.h>

#include <numbers>

#include "qbsim/metrics.hpp"
#include "qbsim/sweep.hpp"

using namespace qbsim;

namespace {

ModelParams xyz_point() {
  ModelParams p;
  p.gamma = 0.5;
  p.delta = 0.5;
  p.dz = 1.0;
  p.gz = 0.5;
  p.theta = 0.4;
  return p;
}

void BM_HermitianEig4(benchmark::State& state) {
  const ComplexMatrix h = build_qb_hamiltonian(xyz_point());
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig4);

void BM_ChainHamiltonianEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix h = build_chain_hamiltonian(xyz_point(), n);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_ChainHamiltonianEig)->Arg(3)->Arg(4)->Arg(5);

void BM_ErgotropyPoint(benchmark::State& state) {
  const ModelParams p = xyz_point();
  for (auto _ : state) {
    const ChargingProtocol proto(p);
    benchmark::DoNotOptimize(ergotropy_spectral(proto.charged_state(1.2), proto.spectrum()));
  }
}
BENCHMARK(BM_ErgotropyPoint);

void BM_ErgotropyClosedForm(benchmark::State& state) {
  const ModelParams p = xyz_point();
  for (auto _ : state) benchmark::DoNotOptimize(ergotropy_closed_form(p, 1.2));
}
BENCHMARK(BM_ErgotropyClosedForm);

void BM_MaximizeOverTime(benchmark::State& state) {
  const ModelParams p = xyz_point();
  for (auto _ : state) benchmark::DoNotOptimize(maximize_over_time(p, Metric::ErgotropyMax, 0.0, std::numbers::pi));
}
BENCHMARK(BM_MaximizeOverTime);

void BM_Sweep(benchmark::State& state) {
  SweepConfig c;
  c.base = xyz_point();
  c.axis1 = {"omega_t", 0.0, 2.0 * std::numbers::pi, 41};
  c.axis2 = Axis{"theta", 0.0, std::numbers::pi / 2, 41};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c, threads));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
