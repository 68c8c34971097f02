// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "mbc/errors.hpp"

namespace mbc {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // positive, sum to b - a
};

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree
/// 2n - 1. Nodes by Newton iteration on the Legendre recurrence.
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace mbc
