// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for the test suites: seeded random states and slow
// independent reference routes (kept free of the library's fast paths).

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "mbc/density_matrix.hpp"
#include "mbc/permutation.hpp"
#include "mbc/spectrum.hpp"

namespace mbctest {

inline std::vector<double> random_spectrum_values(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<double> v(static_cast<std::size_t>(m));
  for (auto& x : v) x = u(rng);
  return v;  // Spectrum normalizes
}

inline mbc::Spectrum random_spectrum(std::mt19937_64& rng, int m) {
  return mbc::Spectrum(random_spectrum_values(rng, m));
}

/// Random full-rank density matrix A A^dag / tr.
inline mbc::DensityMatrix random_density(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
  }
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace();
  // scrub the last bits of Hermiticity noise from the complex division
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return mbc::DensityMatrix(std::move(rho));
}

inline Eigen::VectorXcd random_unit_vector(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd v(m);
  for (int i = 0; i < m; ++i) v(i) = std::complex<double>(g(rng), g(rng));
  v.normalize();
  return v;
}

/// Complete homogeneous symmetric polynomial by explicit enumeration of all
/// compositions (exponential; reference only).
inline double h_brute_force(const std::vector<double>& lambda, int degree) {
  double total = 0.0;
  auto rec = [&](auto&& self, std::size_t idx, int remaining, double prod) -> void {
    if (idx + 1 == lambda.size()) {
      total += prod * std::pow(lambda[idx], remaining);
      return;
    }
    double powed = 1.0;
    for (int j = 0; j <= remaining; ++j) {
      self(self, idx + 1, remaining - j, prod * powed);
      powed *= lambda[idx];
    }
  };
  rec(rec, 0, degree, 1.0);
  return total;
}

/// Explicit matrix of the tensor-factor permutation operator on (C^m)^(x n):
/// P_pi |I_1..I_n> = |I_pi(1)..I_pi(n)>. Independent of the library's
/// index-permutation traces.
inline Eigen::MatrixXcd permutation_operator(const mbc::Permutation& pi, int m) {
  const int n = pi.size();
  int dim = 1;
  for (int i = 0; i < n; ++i) dim *= m;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int idx = 0; idx < dim; ++idx) {
    int rest = idx;
    for (int a = n - 1; a >= 0; --a) {
      digits[static_cast<std::size_t>(a)] = rest % m;
      rest /= m;
    }
    int out = 0;
    for (int a = 0; a < n; ++a) out = out * m + digits[static_cast<std::size_t>(pi(a))];
    op(out, idx) = 1.0;
  }
  return op;
}

/// (1/n!) sum_pi P_pi as an explicit matrix.
inline Eigen::MatrixXcd symmetrizer(int m, int n) {
  const auto perms = mbc::enumerate_permutations(n);
  Eigen::MatrixXcd acc = permutation_operator(perms.front(), m);
  for (std::size_t i = 1; i < perms.size(); ++i) acc += permutation_operator(perms[i], m);
  return acc / static_cast<double>(perms.size());
}

}  // namespace mbctest
