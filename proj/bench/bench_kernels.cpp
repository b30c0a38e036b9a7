#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "ruled/catalogue.hpp"
#include "ruled/kernels.hpp"
#include "ruled/numerics.hpp"

using namespace ruled;

namespace {

const RuledSurface& fixture() {
  static const RuledSurface surf = [] {
    const double c = std::sqrt(3.0);
    auto curve = std::make_shared<const ProperTimeCurve>(
        reparametrize_proper_time(catalogue::hyperbolic_helix(2.0, 1.0, {-3.0 / c, 3.0 / c}), -3.0));
    return RuledSurface::over_base(curve, validate_coefficients(0.75, 0.0, 1.25, 1));
  }();
  return surf;
}

std::vector<double> grid(benchmark::State& state) {
  return numerics::uniform_grid(-2.9, 2.9, static_cast<std::size_t>(state.range(0)));
}

void BM_Sweep(benchmark::State& state, kernels::Execution exec) {
  const auto g = grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweep(fixture(), g, {}, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Mesh(benchmark::State& state, kernels::Execution exec) {
  const auto g = grid(state);
  const auto v = numerics::uniform_grid(-1.0, 1.0, 64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mesh(fixture(), g, v, {}, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 64);
}

void BM_Oracle(benchmark::State& state, kernels::Execution exec) {
  const auto g = grid(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::oracle(fixture(), g, DenominatorConvention::PaperExpanded, {}, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Sweep, serial, kernels::Execution::Serial)->Range(64, 16384);
BENCHMARK_CAPTURE(BM_Sweep, parallel, kernels::Execution::Parallel)->Range(64, 16384);
BENCHMARK_CAPTURE(BM_Mesh, serial, kernels::Execution::Serial)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Mesh, parallel, kernels::Execution::Parallel)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Oracle, serial, kernels::Execution::Serial)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Oracle, parallel, kernels::Execution::Parallel)->Range(64, 4096);

BENCHMARK_MAIN();
