// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbc/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace mbc {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("quadrature rule needs at least one node");
  if (!(a < b)) throw DomainError("quadrature interval must satisfy a < b");

  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int pairs = (n + 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    // root bracketed by the Chebyshev estimate; Newton converges in a few steps
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * z;
    rule.nodes[hi] = mid + half * z;
    rule.weights[lo] = rule.weights[hi] = 2.0 * half / ((1.0 - z * z) * pp * pp);
  }
  return rule;
}

}  // namespace mbc
