// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "mbc/errors.hpp"
#include "mbc/spectrum.hpp"

namespace mbc {

/// Dense tensor-power construction is gated at total dimension 4096.
inline constexpr int kProductDimLimit = 4096;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-9;

/// Dense Hermitian unit-trace matrix over a finite-dimensional internal
/// Hilbert space (single-particle or N-particle product space). Hermiticity
/// (1e-12) and trace (1e-9) are enforced on construction; positivity is
/// checked where an eigendecomposition happens anyway (eigen_spectrum) and
/// by min_eigenvalue() in tests.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  /// diag(lambda_1, ..., lambda_m) in the spectrum's (sorted) order.
  static DensityMatrix diagonal(const Spectrum& spectrum);

  /// |phi><phi| for a unit vector phi.
  static DensityMatrix pure(const Eigen::VectorXcd& phi);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

  /// Smallest eigenvalue; O(dim^3), intended for validation.
  double min_eigenvalue() const;

 private:
  Eigen::MatrixXcd entries_;
};

/// N-fold tensor power rho_1p (x) ... (x) rho_1p. Guard: dim^N <= 4096.
DensityMatrix product_state(const DensityMatrix& rho_1p, int n);

/// Eigenvalues of a single-particle state as a Spectrum: clamped at zero
/// (noise floor -1e-10, below that a DomainError), renormalized, sorted.
Spectrum eigen_spectrum(const DensityMatrix& rho_1p);

/// rho_1p = (1-epsilon)|phi><phi| + epsilon * residual.
///
/// The residual is Hermitian with unit trace but not necessarily positive;
/// residual_nonpositive flags a minimum eigenvalue below the noise floor.
/// For epsilon below 1e-12 the residual is numerically undefined and absent.
struct FaintDecomposition {
  double epsilon = 0.0;
  std::optional<DensityMatrix> residual;
  bool residual_nonpositive = false;
};

/// Splits rho_1p against the dominant pure component |phi><phi|.
/// Requires <phi|rho|phi> > 1/2 (i.e. epsilon < 1/2), else RegimeError.
FaintDecomposition faint_decomposition(const DensityMatrix& rho_1p,
                                       const Eigen::VectorXcd& phi);

/// N unit vectors in a common internal space; the separable pure state
/// |phi_1> (x) ... (x) |phi_N>.
class PureProductSpec {
 public:
  explicit PureProductSpec(std::vector<Eigen::VectorXcd> vectors);

  int particle_count() const { return static_cast<int>(vectors_.size()); }
  int internal_dim() const { return static_cast<int>(vectors_.front().size()); }
  const std::vector<Eigen::VectorXcd>& vectors() const { return vectors_; }

  /// Density matrix of the product state; guard dim^N <= 4096.
  DensityMatrix to_density() const;

 private:
  std::vector<Eigen::VectorXcd> vectors_;
};

}  // namespace mbc
