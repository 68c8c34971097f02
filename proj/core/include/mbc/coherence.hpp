// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "mbc/density_matrix.hpp"
#include "mbc/scaled_real.hpp"
#include "mbc/spectrum.hpp"

namespace mbc {

/// Brute-force evaluation over S_N is gated here; the spectral path has no
/// particle-number limit.
inline constexpr int kOracleMaxParticles = 6;

/// Below this N the exact finite-N! form is returned; above it the correction
/// 1/(N!-1) < 4.2e-19 sits under double resolution and the symmetric-subspace
/// weight h_N alone is exact to machine precision.
inline constexpr int kExactFormMaxParticles = 20;

enum class Method {
  oracle,         // modulus sum over S_N on the full internal state
  exact_product,  // finite-N! product-state form (N!*h_N - 1)/(N!-1)
  spectral,       // symmetric-subspace weight h_N (N! >> 1)
  asymptote,      // thermodynamic-limit exponential form
  faint,          // (1-epsilon)^N
};

std::string_view to_string(Method method);

/// W_C (or the reduced-order W_C^(k)) with evaluation metadata.
/// log10_value stays finite when value has underflowed to zero.
struct CoherenceResult {
  double value = 0.0;
  double log10_value = 0.0;
  Method method = Method::spectral;
  int particle_count = 0;  // N
  int order = 0;           // k; equals N for the full coherence

  bool underflowed() const;
};

/// Normalized many-body coherence of an arbitrary internal N-particle state,
/// by the group-reduced modulus sum
///
///   W_C = ( sum_{pi in S_N} |tr(P_pi rho)| - 1 ) / (N! - 1).
///
/// Exact for any normalized rho (not only product states). `rho` must live on
/// an N-fold tensor power; guards: 2 <= N <= 6, dim <= 4096.
CoherenceResult coherence_oracle(const DensityMatrix& rho, int n);

/// Complete homogeneous symmetric polynomial h_degree(lambda_1..lambda_m):
/// the sum of all C(degree+m-1, m-1) degree-`degree` monomials. Evaluated by
/// the single-eigenvalue extension recurrence h_d^(j) = h_d^(j-1) +
/// lambda_j * h_{d-1}^(j) at cost O(m * degree), underflow-safe.
ScaledReal h_complete(const Spectrum& spectrum, int degree);

/// W_C of N particles sharing the single-particle spectrum (internal product
/// state). Exact form (N!*h_N - 1)/(N!-1) up to N = 20, h_N beyond.
CoherenceResult coherence_spectral(const Spectrum& spectrum, int n);

/// Reduced k-particle coherence W_C^(k) of the N-particle product state;
/// equals the full coherence of k particles and is independent of N.
/// Requires 2 <= k <= N.
CoherenceResult coherence_reduced(const Spectrum& spectrum, int n, int k);

/// Residual coherence of the maximally mixed m-level state,
/// C(N+m-1, m-1) / m^N: the relative dimension of the symmetric subspace.
/// Evaluated in log space.
double coherence_maximally_mixed(int m, int n);
double coherence_maximally_mixed_log10(int m, int n);

/// Thermodynamic-limit asymptote
///
///   W_C ~ (N+1)^(d-1) * lambda_max^N * prod_{lambda_j < lambda_max}
///         (1 - lambda_j/lambda_max)^(-1),
///
/// with d the degeneracy of lambda_max under `degeneracy_tol`. Requires
/// lambda_max < 1 (at lambda_max = 1 the exact value is 1 and no asymptote
/// applies). Evaluated in log space; may exceed 1 at small N.
double coherence_asymptote(const Spectrum& spectrum, int n,
                           double degeneracy_tol = kDegeneracyTol);
double coherence_asymptote_log10(const Spectrum& spectrum, int n,
                                 double degeneracy_tol = kDegeneracyTol);

/// Faint-distinguishability decay (1 - epsilon)^N for a dominant pure
/// component of weight 1 - epsilon. Requires 0 <= epsilon < 1/2.
double coherence_faint(double epsilon, int n);

/// Independent oracle for h_N on product spectra: tr(P_pi rho) factorizes
/// over the cycles of pi into power sums p_l = sum_j lambda_j^l, so
///
///   (1/N!) sum_{pi in S_N} prod_{cycles c of pi} p_len(c)
///
/// must equal h_complete(spectrum, N). Enumerates S_N; guard N <= 8.
double oracle_power_sum(const Spectrum& spectrum, int n);

}  // namespace mbc
