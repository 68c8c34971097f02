// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbc/external_state.hpp"

#include <cmath>

#include "tensor_index.hpp"

namespace mbc {

ExternalState::ExternalState(int particle_count, Statistics stats, Eigen::MatrixXcd coeff)
    : n_(particle_count), stats_(stats), coeff_(std::move(coeff)) {
  const auto nf = static_cast<Eigen::Index>(permutation_count(n_));
  if (coeff_.rows() != nf || coeff_.cols() != nf) {
    throw DomainError("external-state coefficient matrix must be N! x N!");
  }
}

std::complex<double> ExternalState::coefficient(const Permutation& pi,
                                                const Permutation& pi_prime) const {
  if (pi.size() != n_ || pi_prime.size() != n_) {
    throw DomainError("permutation degree does not match the external state");
  }
  return coeff_(static_cast<Eigen::Index>(pi.lex_rank()),
                static_cast<Eigen::Index>(pi_prime.lex_rank()));
}

ExternalState build_external(const DensityMatrix& rho, int n, Statistics stats) {
  if (n < 1 || n > kMaxExternalParticles) {
    throw SizeLimitError("external-state construction supports 1 <= N <= 6");
  }
  if (rho.dim() > kProductDimLimit) {
    throw SizeLimitError("internal dimension exceeds the 4096 guard");
  }
  const int m = detail::infer_local_dim(rho.dim(), n);

  const std::vector<Permutation> perms = enumerate_permutations(n);
  const auto nf = static_cast<Eigen::Index>(perms.size());

  // tr(P_pi rho P_pi'^dag) = tr(P_{pi pi'^-1} rho), so N! traces cover all
  // N!^2 pairs.
  std::vector<std::complex<double>> trace(perms.size());
  std::vector<int> sign(perms.size());
  std::vector<Permutation> inverse;
  inverse.reserve(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    trace[a] = detail::permuted_trace(rho.matrix(), perms[a], m, n);
    sign[a] = perms[a].sign();
    inverse.push_back(perms[a].inverse());
  }

  const double norm = 1.0 / static_cast<double>(perms.size());
  Eigen::MatrixXcd coeff(nf, nf);
  for (Eigen::Index a = 0; a < nf; ++a) {
    for (Eigen::Index b = 0; b < nf; ++b) {
      const auto composed = perms[static_cast<std::size_t>(a)].compose(
          inverse[static_cast<std::size_t>(b)]);
      const double s = stats == Statistics::fermion
                           ? static_cast<double>(sign[static_cast<std::size_t>(a)] *
                                                 sign[static_cast<std::size_t>(b)])
                           : 1.0;
      coeff(a, b) = s * norm * trace[composed.lex_rank()];
    }
  }
  return ExternalState(n, stats, std::move(coeff));
}

double symmetric_projection(const ExternalState& ext) {
  const auto& coeff = ext.coefficients();
  const auto nf = coeff.rows();
  Eigen::VectorXcd weights(nf);
  if (ext.statistics() == Statistics::fermion) {
    const auto perms = enumerate_permutations(ext.particle_count());
    for (Eigen::Index a = 0; a < nf; ++a) {
      weights(a) = static_cast<double>(perms[static_cast<std::size_t>(a)].sign());
    }
  } else {
    weights.setOnes();
  }
  const std::complex<double> total = weights.adjoint() * coeff * weights;
  return std::real(total) / static_cast<double>(nf);
}

double normalized_coherence(const ExternalState& ext) {
  if (ext.particle_count() < 2) {
    throw DomainError("normalized coherence requires N >= 2 (undefined for N = 1)");
  }
  const auto& coeff = ext.coefficients();
  const double total = coeff.cwiseAbs().sum();
  const double diag = coeff.diagonal().cwiseAbs().sum();
  return (total - diag) / static_cast<double>(coeff.rows() - 1);
}

}  // namespace mbc
