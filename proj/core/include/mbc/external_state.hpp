// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "mbc/density_matrix.hpp"
#include "mbc/permutation.hpp"

namespace mbc {

/// Exact N!xN! construction is gated at N = 6 (720x720 coefficients).
inline constexpr int kMaxExternalParticles = 6;

enum class Statistics { boson, fermion };

/// Reduced external many-body state in the permuted basis {|E_pi>}: an
/// N!xN! coefficient matrix indexed by lexicographic permutation rank.
///
/// The external labels are mutually orthogonal with one particle per label,
/// so the permuted basis spans the full support and the number of external
/// modes never enters.
class ExternalState {
 public:
  ExternalState(int particle_count, Statistics stats, Eigen::MatrixXcd coeff);

  int particle_count() const { return n_; }
  Statistics statistics() const { return stats_; }

  /// Coefficients [rho_E]_{pi,pi'} with rows/columns in lexicographic
  /// permutation order (identity first).
  const Eigen::MatrixXcd& coefficients() const { return coeff_; }

  std::complex<double> coefficient(const Permutation& pi, const Permutation& pi_prime) const;

 private:
  int n_;
  Statistics stats_;
  Eigen::MatrixXcd coeff_;
};

/// Builds the external state of N identical bosons or fermions whose internal
/// degrees of freedom carry the N-particle state `rho`:
///
///   [rho_E]_{pi,pi'} = (+-1)^{pi pi'} (1/N!) tr(P_pi rho P_pi'^dag)
///
/// where P_pi permutes tensor factors, P_pi |I_1..I_N> = |I_pi(1)..I_pi(N)>.
/// `rho` must live on an N-fold tensor power (dim = m^N); guards: N <= 6,
/// dim <= 4096.
ExternalState build_external(const DensityMatrix& rho, int n, Statistics stats);

/// Expectation value of the (anti-)symmetric projector in the external state,
/// evaluated in the permutation-index representation. Equals the weight of
/// the unsymmetrized internal state on the symmetric subspace.
double symmetric_projection(const ExternalState& ext);

/// Normalized many-body coherence of the external state: the mean modulus of
/// its off-diagonal coefficients,
///
///   W_C = 1/(N!-1) * sum_{pi != pi'} |[rho_E]_{pi,pi'}|,   0 <= W_C <= 1.
double normalized_coherence(const ExternalState& ext);

}  // namespace mbc
