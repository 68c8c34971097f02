// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <vector>

#include "mbc/coherence.hpp"
#include "mbc/quadrature.hpp"
#include "mbc/spectrum.hpp"

namespace mbc {

/// The faint-jitter expansion holds for sigma*Delta below 1/sqrt(2).
inline constexpr double kFaintJitterLimit = 0.70710678118654752;

/// Arrival-time density tabulated as (t, P(t)) rows in a two-column text
/// file ('#' comments allowed), linearly interpolated between knots, zero
/// outside the tabulated support, renormalized to unit mass on load.
class TabulatedDensity {
 public:
  static TabulatedDensity load(const std::filesystem::path& file);
  TabulatedDensity(std::vector<double> t, std::vector<double> p);

  double operator()(double t) const;
  double mean() const { return mean_; }
  double stddev() const { return stddev_; }
  double t_min() const { return t_.front(); }
  double t_max() const { return t_.back(); }

 private:
  std::vector<double> t_;  // ascending
  std::vector<double> p_;
  double mean_ = 0.0;
  double stddev_ = 0.0;
};

/// Photon arrival-time scenario: wavepackets of spectral width Delta arrive
/// at random times with density P(t) of standard deviation sigma. Everything
/// is dimensionless through the product sigma*Delta.
///
/// The wavepacket overlap's carrier phase e^(i*Omega*(t'-t)) is a diagonal
/// phase conjugation and leaves the spectrum untouched, so the kernel is kept
/// real symmetric and the central frequency never appears.
struct PhotonConfig {
  double sigma_delta = 0.0;       // sigma * Delta >= 0
  int quadrature_points = 200;    // >= 16
  double window_halfwidth = 8.0;  // in units of sigma, >= 5
  std::optional<TabulatedDensity> density;  // default: standard Gaussian
};

/// Symmetric Nystrom matrix M[a,b] = sqrt(w_a P(t_a) w_b P(t_b)) *
/// exp(-Delta^2 (t_a - t_b)^2 / 2) sharing the nonzero spectrum of the
/// continuous mixed state. Trace must be 1 within 1e-6 or a
/// DiscretizationError is raised (never a silently wrong spectrum).
Eigen::MatrixXd photon_kernel_matrix(const PhotonConfig& config);

/// Eigenvalues of the discretized arrival-time state: clamped at zero,
/// truncated below 1e-14, renormalized, non-increasing.
Spectrum photon_spectrum(const PhotonConfig& config);

/// W_C of N photons via the spectral path on photon_spectrum().
CoherenceResult photon_coherence(const PhotonConfig& config, int n);

/// Faint-jitter decay (1 - (sigma*Delta)^2)^N; requires
/// sigma_delta < 1/sqrt(2).
double faint_jitter_approx(double sigma_delta, int n);

/// Acceptable arrival-time scatter for a target coherence level.
struct AdmissibleJitter {
  double full;        // sqrt(1 - W^(1/N))
  double simplified;  // sqrt((1 - W)/N), the N^(-1/2) power-law form
};
AdmissibleJitter admissible_jitter(double w_target, int n);

}  // namespace mbc
