// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "mbc/coherence.hpp"
#include "mbc/spectrum.hpp"

namespace mbc {

/// The low-temperature closed form holds for e^(-dE/kT) < 1/2, i.e.
/// kB*T/dE below 1/ln(2).
inline constexpr double kLowTemperatureLimit = 1.4426950408889634;

/// Atom in a trap site modeled as m equidistant levels E_j = (j-1)*dE with a
/// Boltzmann population at dimensionless temperature kB*T/dE. The energy
/// origin is fixed at E_1 = 0; Boltzmann weights depend only on level
/// differences, so this only pins the partition function's normalization.
struct ThermalConfig {
  int levels = 4;
  double kbt_over_de = 1.0;
};

/// Boltzmann spectrum lambda_j = e^(-(j-1)/kbt) / Z, exactly normalized and
/// non-increasing in j.
Spectrum thermal_spectrum(const ThermalConfig& config);

struct ThermalSweepRow {
  double kbt_over_de;
  int n;
  double w_c;
  double log10_w_c;
};

/// W_C over a (temperature, N) grid via the spectral path; rows in grid order
/// (temperature-major). Monotone non-increasing along both axes.
std::vector<ThermalSweepRow> coherence_vs_temperature(std::span<const double> kbt_grid,
                                                      std::span<const int> n_list,
                                                      int levels = 4);

/// Low-temperature decay (1 - e^(-dE/kT))^N: the ground level dominates and
/// the excited-level weight e^(-dE/kT) plays the faint epsilon. Requires
/// kbt_over_de < 1/ln(2).
double low_temperature_approx(const ThermalConfig& config, int n);

/// Admissible thermal excitation for a target coherence,
/// kB*T/dE = -1 / ln(1 - W^(1/N)). Inverse of low_temperature_approx.
double admissible_temperature(double w_target, int n);

}  // namespace mbc
