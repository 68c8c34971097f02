// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mbc/coherence.hpp"
#include "mbc/density_matrix.hpp"
#include "mbc/photon.hpp"
#include "mbc/thermal.hpp"

namespace {

mbc::Spectrum make_spectrum(int m) {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<double> v(static_cast<std::size_t>(m));
  for (auto& x : v) x = u(rng);
  return mbc::Spectrum(std::move(v));
}

void BM_HComplete(benchmark::State& state) {
  const auto spec = make_spectrum(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbc::h_complete(spec, n));
  }
}
BENCHMARK(BM_HComplete)
    ->Args({4, 100})
    ->Args({4, 1000})
    ->Args({200, 100})
    ->Args({200, 1000});

void BM_SpectralCoherence(benchmark::State& state) {
  const auto spec = make_spectrum(4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbc::coherence_spectral(spec, n));
  }
}
BENCHMARK(BM_SpectralCoherence)->Arg(10)->Arg(100)->Arg(1000);

void BM_OracleS2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = mbc::product_state(
      mbc::DensityMatrix::diagonal(make_spectrum(2)), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbc::coherence_oracle(rho, n));
  }
}
BENCHMARK(BM_OracleS2)->DenseRange(2, 6);

void BM_PowerSumOracle(benchmark::State& state) {
  const auto spec = make_spectrum(4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbc::oracle_power_sum(spec, n));
  }
}
BENCHMARK(BM_PowerSumOracle)->DenseRange(4, 8);

void BM_PhotonSpectrum(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbc::photon_spectrum({0.5, nodes, 8.0, std::nullopt}));
  }
}
BENCHMARK(BM_PhotonSpectrum)->Arg(100)->Arg(200)->Arg(400);

void BM_ThermalSweepRow(benchmark::State& state) {
  for (auto _ : state) {
    const auto spec = mbc::thermal_spectrum({4, 0.5});
    benchmark::DoNotOptimize(mbc::coherence_spectral(spec, 100));
  }
}
BENCHMARK(BM_ThermalSweepRow);

}  // namespace

BENCHMARK_MAIN();
