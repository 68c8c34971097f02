// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

// Internal helpers for permuting tensor-product basis indices. Not installed.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mbc/errors.hpp"
#include "mbc/permutation.hpp"

namespace mbc::detail {

/// Smallest m with m^n == dim, or a DomainError: permutation operators need
/// an n-fold tensor-power space.
inline int infer_local_dim(int dim, int n) {
  if (dim == 1) return 1;
  for (int m = 2; ; ++m) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= m;
    if (p == static_cast<double>(dim)) return m;
    if (p > static_cast<double>(dim)) break;
  }
  throw DomainError("state dimension is not an N-fold tensor power m^N");
}

/// Digit weights of the mixed-radix index: position a carries m^(n-1-a).
inline std::vector<int> index_weights(int m, int n) {
  std::vector<int> pow(static_cast<std::size_t>(n));
  int w = 1;
  for (int a = n - 1; a >= 0; --a) {
    pow[static_cast<std::size_t>(a)] = w;
    w *= m;
  }
  return pow;
}

/// tr(P_sigma rho) = sum_I rho(I compose sigma^-1, I) where the basis index I
/// encodes the internal assignment list in base m.
inline std::complex<double> permuted_trace(const Eigen::MatrixXcd& rho,
                                           const Permutation& sigma, int m, int n) {
  const Permutation sigma_inv = sigma.inverse();
  const std::vector<int> pow = index_weights(m, n);
  const int dim = static_cast<int>(rho.rows());
  std::vector<int> digits(static_cast<std::size_t>(n));
  std::complex<double> total = 0.0;
  for (int idx = 0; idx < dim; ++idx) {
    int rest = idx;
    for (int a = 0; a < n; ++a) {
      digits[static_cast<std::size_t>(a)] = rest / pow[static_cast<std::size_t>(a)];
      rest %= pow[static_cast<std::size_t>(a)];
    }
    int permuted = 0;
    for (int a = 0; a < n; ++a) {
      permuted += digits[static_cast<std::size_t>(sigma_inv(a))] * pow[static_cast<std::size_t>(a)];
    }
    total += rho(permuted, idx);
  }
  return total;
}

}  // namespace mbc::detail
