#include <benchmark/benchmark.h>

#include <numbers>

#include "hypersim/abhi.hpp"

namespace {

using namespace hypersim;

void BM_Propagator(benchmark::State& state) {
  const Hamiltonian2 h(0.3, -0.7, Complex(0.8, -0.45));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator(h, t));
    t += 1e-6;
  }
}
BENCHMARK(BM_Propagator);

void BM_ExactDistribution(benchmark::State& state) {
  const Hamiltonian2 h = Hamiltonian2::sigma_x();
  const auto tape = MeasurementTape::uniform(Rational(1, 3), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_distribution(h, QubitState::zero(), tape));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactDistribution)->DenseRange(4, 16, 4);

void BM_SampleShots(benchmark::State& state) {
  const Hamiltonian2 h = Hamiltonian2::sigma_x();
  const auto tape = MeasurementTape::uniform(rational_from_double(std::numbers::pi / 4), 16);
  const auto shots = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_shots(h, QubitState::zero(), tape, shots, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleShots)->Arg(10'000);

}  // namespace
