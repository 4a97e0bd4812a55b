// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cwtasym Authors

#include <benchmark/benchmark.h>

#include "cwtasym/expansion.hpp"
#include "cwtasym/mellin.hpp"
#include "cwtasym/oracle.hpp"
#include "cwtasym/specfun.hpp"
#include "cwtasym/wavelets.hpp"

namespace {

using namespace cwtasym;

void BM_GammaComplex(benchmark::State& state) {
  cplx z(2.3, 4.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_complex(z));
    z += cplx(1e-9, 0.0);
  }
}
BENCHMARK(BM_GammaComplex);

void BM_IncompleteGammaImaginary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(upper_incomplete_gamma(-1.5, cplx(0.0, -20.0)));
}
BENCHMARK(BM_IncompleteGammaImaginary);

void BM_ParabolicCylinder(benchmark::State& state) {
  const double omega0 = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parabolic_cylinder_D(-3.0, cplx(0.0, -omega0)));
  }
}
BENCHMARK(BM_ParabolicCylinder)->Arg(1)->Arg(5)->Arg(20);

void BM_NumericTaylor(benchmark::State& state) {
  const auto w = WaveletSpec::morlet(5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(small_u_coefficients_numeric(
        [&](cplx u) { return w.psi_hat_conj_analytic(u); }, 1.0, 12));
  }
}
BENCHMARK(BM_NumericTaylor);

void BM_MellinMethod(benchmark::State& state) {
  const auto method = static_cast<MellinMethod>(state.range(0));
  const HSpec h{SignalSpec::two_sided_exp(), 2.0, false};
  const QuadratureConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(mellin_transform(h, 1.5, method, cfg));
  state.SetLabel(mellin_method_name(method));
}
BENCHMARK(BM_MellinMethod)
    ->Arg(static_cast<int>(MellinMethod::SplitTailAnalytic))
    ->Arg(static_cast<int>(MellinMethod::EpsExtrapolation));

void BM_CwtFourier(benchmark::State& state) {
  const double a = 1.0 / static_cast<double>(state.range(0));
  const QuadratureConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cwt_fourier(SignalSpec::lorentzian(), WaveletSpec::morlet(5.0), 1.0, a, cfg));
  }
}
BENCHMARK(BM_CwtFourier)->Arg(1)->Arg(100)->Arg(10000);

void BM_CwtTime(benchmark::State& state) {
  const double a = 1.0 / static_cast<double>(state.range(0));
  const QuadratureConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cwt_time(SignalSpec::lorentzian(), WaveletSpec::morlet(5.0), 1.0, a, cfg));
  }
}
BENCHMARK(BM_CwtTime)->Arg(1)->Arg(100)->Arg(10000);

void BM_FrequencySeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadratureConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        frequency_series(SignalSpec::lorentzian(), WaveletSpec::morlet(5.0), 1.0, n, cfg));
  }
}
BENCHMARK(BM_FrequencySeries)->Arg(1)->Arg(4)->Arg(8);

void BM_RemainderFrequency(benchmark::State& state) {
  const QuadratureConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(remainder_frequency(SignalSpec::lorentzian(),
                                                 WaveletSpec::morlet(5.0), 0.0, 0.1, 3, cfg));
  }
}
BENCHMARK(BM_RemainderFrequency);

}  // namespace

BENCHMARK_MAIN();
