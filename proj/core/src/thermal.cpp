// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbc/thermal.hpp"

#include <cmath>

namespace mbc {

namespace {

void validate(const ThermalConfig& config) {
  if (config.levels < 2) throw DomainError("thermal model requires at least 2 levels");
  if (!(config.kbt_over_de > 0.0)) {
    throw DomainError("temperature kB*T/dE must be positive");
  }
}

}  // namespace

Spectrum thermal_spectrum(const ThermalConfig& config) {
  validate(config);
  const double ratio = std::exp(-1.0 / config.kbt_over_de);  // 0 when kT underflows
  std::vector<double> weights(static_cast<std::size_t>(config.levels));
  double w = 1.0;
  for (auto& v : weights) {
    v = w;
    w *= ratio;
  }
  return Spectrum(std::move(weights));
}

std::vector<ThermalSweepRow> coherence_vs_temperature(std::span<const double> kbt_grid,
                                                      std::span<const int> n_list,
                                                      int levels) {
  std::vector<ThermalSweepRow> rows;
  rows.reserve(kbt_grid.size() * n_list.size());
  for (double kbt : kbt_grid) {
    const Spectrum spectrum = thermal_spectrum({levels, kbt});
    for (int n : n_list) {
      const CoherenceResult r = coherence_spectral(spectrum, n);
      rows.push_back({kbt, n, r.value, r.log10_value});
    }
  }
  return rows;
}

double low_temperature_approx(const ThermalConfig& config, int n) {
  validate(config);
  if (n < 2) throw DomainError("many-body coherence requires N >= 2");
  const double excited = std::exp(-1.0 / config.kbt_over_de);
  if (!(excited < 0.5)) {
    throw RegimeError(
        "low-temperature form requires e^(-dE/kT) < 1/2, i.e. kB*T/dE < 1/ln(2) "
        "(~1.4427)");
  }
  return std::pow(1.0 - excited, n);
}

double admissible_temperature(double w_target, int n) {
  if (!(w_target > 0.0) || !(w_target < 1.0)) {
    throw DomainError("target coherence must lie strictly inside (0, 1)");
  }
  if (n < 2) throw DomainError("many-body coherence requires N >= 2");
  const double root = std::exp(std::log(w_target) / static_cast<double>(n));
  return -1.0 / std::log(1.0 - root);
}

}  // namespace mbc
