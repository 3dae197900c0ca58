#include <benchmark/benchmark.h>

#include "etalab/curve.hpp"
#include "etalab/eta.hpp"
#include "etalab/gamma.hpp"
#include "etalab/zeros.hpp"

namespace {

void BM_EtaLowOrdinate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etalab::eta({0.5, 1.0}));
}
BENCHMARK(BM_EtaLowOrdinate);

void BM_EtaNearFirstZero(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etalab::eta({0.5, 14.134725}));
}
BENCHMARK(BM_EtaNearFirstZero);

void BM_EtaHighOrdinate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etalab::eta({0.3, 29.5}));
}
BENCHMARK(BM_EtaHighOrdinate);

void BM_EtaBoundaryEuler(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etalab::eta({0.0, 14.0}));
}
BENCHMARK(BM_EtaBoundaryEuler);

void BM_EtaDerivative(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etalab::eta_derivative({0.5, 14.0}));
}
BENCHMARK(BM_EtaDerivative);

void BM_LogGamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etalab::log_gamma({0.25, 7.0}));
}
BENCHMARK(BM_LogGamma);

void BM_FunctionalEquationResidual(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etalab::functional_equation_residual({0.3, 5.0}));
}
BENCHMARK(BM_FunctionalEquationResidual);

void BM_TraceSigmaCurve(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        etalab::trace_sigma_curve(0.5, 14.0, 15.0, static_cast<int>(state.range(0)),
                                  etalab::SeriesSource::Eta));
}
BENCHMARK(BM_TraceSigmaCurve)->Arg(101)->Arg(301);

void BM_WindingSmallRect(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(etalab::winding_number({0.1, 0.9, 10.0, 15.0}, 32));
}
BENCHMARK(BM_WindingSmallRect);

}  // namespace

BENCHMARK_MAIN();
