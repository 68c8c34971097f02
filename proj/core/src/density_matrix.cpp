// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbc/density_matrix.hpp"

#include <cmath>
#include <complex>

namespace mbc {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Eigen::Index ra = a.rows(), rb = b.rows();
  Eigen::MatrixXcd out(ra * rb, ra * rb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ra; ++j) {
      out.block(i * rb, j * rb, rb, rb) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw DomainError("density matrix must be square and non-empty");
  }
  const double herm_dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm_dev <= kHermitianTol)) {
    throw DomainError("density matrix is not Hermitian within 1e-12");
  }
  const double trace_dev = std::abs(entries_.trace() - std::complex<double>(1.0, 0.0));
  if (!(trace_dev <= kTraceTol)) {
    throw DomainError("density matrix trace deviates from 1 by more than 1e-9");
  }
}

DensityMatrix DensityMatrix::diagonal(const Spectrum& spectrum) {
  const auto m = static_cast<Eigen::Index>(spectrum.size());
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) d(j, j) = spectrum[static_cast<std::size_t>(j)];
  return DensityMatrix(std::move(d));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& phi) {
  if (std::abs(phi.norm() - 1.0) > kHermitianTol) {
    throw DomainError("pure-state vector must have unit norm within 1e-12");
  }
  return DensityMatrix(phi * phi.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("eigensolver failed to converge");
  return solver.eigenvalues().minCoeff();
}

DensityMatrix product_state(const DensityMatrix& rho_1p, int n) {
  if (n < 1) throw DomainError("tensor power requires N >= 1");
  double total = 1.0;
  for (int i = 0; i < n; ++i) {
    total *= rho_1p.dim();
    if (total > kProductDimLimit) {
      throw SizeLimitError("product state dimension exceeds the 4096 guard");
    }
  }
  Eigen::MatrixXcd acc = rho_1p.matrix();
  for (int i = 1; i < n; ++i) acc = kron(acc, rho_1p.matrix());
  return DensityMatrix(std::move(acc));
}

Spectrum eigen_spectrum(const DensityMatrix& rho_1p) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_1p.matrix(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("eigensolver failed to converge");
  const auto& ev = solver.eigenvalues();
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  for (double v : values) {
    if (v < kEigenvalueNoiseFloor) {
      throw DomainError("density matrix has an eigenvalue below the -1e-10 noise floor");
    }
  }
  return Spectrum(std::move(values));  // clamps the noise band, normalizes, sorts
}

FaintDecomposition faint_decomposition(const DensityMatrix& rho_1p,
                                       const Eigen::VectorXcd& phi) {
  if (phi.size() != rho_1p.dim()) {
    throw DomainError("reference vector dimension does not match the state");
  }
  if (std::abs(phi.norm() - 1.0) > kHermitianTol) {
    throw DomainError("reference vector must have unit norm within 1e-12");
  }
  const double weight = std::real((phi.adjoint() * rho_1p.matrix() * phi)(0, 0));
  const double epsilon = 1.0 - weight;
  if (!(epsilon < 0.5)) {
    throw RegimeError(
        "faint decomposition requires <phi|rho|phi> > 1/2, i.e. epsilon < 1/2");
  }

  FaintDecomposition out;
  out.epsilon = std::max(epsilon, 0.0);
  constexpr double kEpsilonFloor = 1e-12;  // below this the residual is 0/0 noise
  if (out.epsilon < kEpsilonFloor) return out;

  Eigen::MatrixXcd residual =
      (rho_1p.matrix() - (1.0 - epsilon) * (phi * phi.adjoint())) / epsilon;
  // the 1/epsilon division amplifies rounding in the trace and Hermiticity
  // of the difference; scrub both (exact relations of the decomposition)
  residual = (residual + residual.adjoint().eval()) / 2.0;
  residual /= residual.trace().real();
  out.residual = DensityMatrix(std::move(residual));
  out.residual_nonpositive = out.residual->min_eigenvalue() < kEigenvalueNoiseFloor;
  return out;
}

PureProductSpec::PureProductSpec(std::vector<Eigen::VectorXcd> vectors)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw DomainError("product spec requires at least one vector");
  const auto dim = vectors_.front().size();
  for (const auto& v : vectors_) {
    if (v.size() != dim) throw DomainError("product spec vectors must share one space");
    if (std::abs(v.norm() - 1.0) > kHermitianTol) {
      throw DomainError("product spec vectors must have unit norm within 1e-12");
    }
  }
}

DensityMatrix PureProductSpec::to_density() const {
  double total = 1.0;
  for (int i = 0; i < particle_count(); ++i) {
    total *= internal_dim();
    if (total > kProductDimLimit) {
      throw SizeLimitError("product state dimension exceeds the 4096 guard");
    }
  }
  Eigen::MatrixXcd acc = vectors_.front() * vectors_.front().adjoint();
  for (std::size_t i = 1; i < vectors_.size(); ++i) {
    acc = kron(acc, vectors_[i] * vectors_[i].adjoint());
  }
  return DensityMatrix(std::move(acc));
}

}  // namespace mbc
