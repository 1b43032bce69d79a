// bench_main.cpp — hot-path timings: rotation synthesis, parity-encoded
// runs, curve evaluation, collective dephasing

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "eqcdj/analysis.hpp"
#include "eqcdj/decoherence.hpp"
#include "eqcdj/fock.hpp"
#include "eqcdj/method1.hpp"
#include "eqcdj/oracle.hpp"
#include "eqcdj/state.hpp"

namespace {

using namespace eqcdj;

void bm_rotation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(rotation(Axis::Y, std::numbers::pi / 4, n));
}
BENCHMARK(bm_rotation)->Arg(8)->Arg(32)->Arg(128);

void bm_parity_run(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BooleanOracle oracle = BooleanOracle::parse("0110");
  EnsembleDims dims;
  dims.n_y = 1;
  dims.n_x = {n, n};
  for (auto _ : state)
    benchmark::DoNotOptimize(quantum_mode_m1(oracle, OracleParams::zero(), dims));
}
BENCHMARK(bm_parity_run)->Arg(4)->Arg(16)->Arg(64);

void bm_curve_point(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> counts = {n, n};
  double tau = 0.0137;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p_m(tau, 2, counts));
    tau += 1e-6;  // defeat any caching of the argument
  }
}
BENCHMARK(bm_curve_point)->Arg(50)->Arg(200)->Arg(1000);

void bm_dephase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Complex eq = 1.0 / std::numbers::sqrt2;
  const StateVector psi = product_state(
      {coherent_state(0.0, 1.0, 1), coherent_state(eq, eq, n), coherent_state(eq, eq, n)});
  const DensityMatrix rho = DensityMatrix::pure(psi);
  DephasingSpec spec;
  spec.gamma = 1.0;
  spec.t = 0.3;
  for (auto _ : state) {
    DensityMatrix scratch = rho;
    dephase(scratch, spec);
    benchmark::DoNotOptimize(scratch.rho);
  }
}
BENCHMARK(bm_dephase)->Arg(4)->Arg(8)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
