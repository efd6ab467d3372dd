#include <benchmark/benchmark.h>

#include <numbers>

#include "diracam/field.hpp"
#include "diracam/observables.hpp"
#include "diracam/perturbation.hpp"

namespace {

using namespace diracam;

constexpr double m = constants::electron_mass_eV;

PlaneWaveElectron bench_state(double d) {
  return {.momentum = {2 * std::numbers::pi / d, 0, nearest_lattice_momentum(10 * m, d)},
          .mass = m,
          .lambda_plus = std::sqrt(0.3),
          .lambda_minus = std::polar(std::sqrt(0.7), -0.4)};
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) {
  state.SetLabel(state.range(1) ? "parallel" : "serial");
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}

void BM_SuperpositionField(benchmark::State& state) {
  const UnitsContext u;
  const double d = meter_to_natural(1.0, u);
  const LatticeBox box = LatticeBox::cornered(d, static_cast<int>(state.range(0)));
  const PlaneWaveElectron e = bench_state(d);
  for (auto _ : state) benchmark::DoNotOptimize(superposition_field(e, box, exec_of(state)));
  label(state);
}

void BM_DeltaPsi(benchmark::State& state) {
  const UnitsContext u;
  const double d = meter_to_natural(1.0, u);
  const LatticeBox box = LatticeBox::cornered(d, static_cast<int>(state.range(0)));
  const SpinorField psi = superposition_field(bench_state(d), box, Exec::serial);
  const FieldConfiguration a = constant_field_potential({{0, 0, tesla_to_natural(1e-5, u)}});
  for (auto _ : state) benchmark::DoNotOptimize(delta_psi(a, psi, u, exec_of(state)));
  label(state);
}

void BM_RhoE(benchmark::State& state) {
  const UnitsContext u;
  const double d = meter_to_natural(1.0, u);
  const LatticeBox box = LatticeBox::cornered(d, static_cast<int>(state.range(0)));
  const SpinorField psi = superposition_field(bench_state(d), box, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(rho_E(psi, u, exec_of(state)));
  label(state);
}

void BM_PairwiseSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> v(n * n * n);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / static_cast<double>(i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_sum(v, exec_of(state)));
  label(state);
}

void BM_EvaluateShifts(benchmark::State& state) {
  const UnitsContext u;
  const double d = meter_to_natural(1.0, u);
  const ConstantFieldScenario sc{.state = bench_state(d),
                                 .box = LatticeBox::cornered(d, static_cast<int>(state.range(0))),
                                 .field = {{0, 0, tesla_to_natural(1e-5, u)}},
                                 .units = u,
                                 .l3_route = L3Route::functional};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_shifts(sc, exec_of(state)));
  label(state);
}

void grid_args(benchmark::internal::Benchmark* b) {
  for (int n : {16, 32, 64})
    for (int par : {0, 1}) b->Args({n, par});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

BENCHMARK(BM_SuperpositionField)->Apply(grid_args);
BENCHMARK(BM_DeltaPsi)->Apply(grid_args);
BENCHMARK(BM_RhoE)->Apply(grid_args);
BENCHMARK(BM_PairwiseSum)->Apply(grid_args);
BENCHMARK(BM_EvaluateShifts)->Apply(grid_args);

}  // namespace

BENCHMARK_MAIN();
