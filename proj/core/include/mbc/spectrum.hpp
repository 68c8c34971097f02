// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <vector>

#include "mbc/errors.hpp"

namespace mbc {

/// Eigenvalues below this (relative) gap from the leading one count as
/// degenerate with it. Exact degeneracy is not expressible in floating point,
/// so the asymptote's degenerate/non-degenerate switch runs on this tolerance.
inline constexpr double kDegeneracyTol = 1e-9;

/// Eigenvalues no lower than this are treated as numerical noise of zero;
/// anything more negative is rejected as genuinely unphysical.
inline constexpr double kEigenvalueNoiseFloor = -1e-10;

/// Probability spectrum of a single-particle internal state: non-negative
/// eigenvalues, normalized to unit sum on construction, stored in
/// non-increasing order.
class Spectrum {
 public:
  /// Normalizes and sorts. Values in [kEigenvalueNoiseFloor, 0) are clamped
  /// to zero; more negative or non-finite values are rejected.
  explicit Spectrum(std::vector<double> eigenvalues);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }
  const std::vector<double>& values() const { return values_; }

  double max() const { return values_.front(); }

  /// Number of leading eigenvalues within `rel_tol` relative gap of max().
  int degeneracy(double rel_tol = kDegeneracyTol) const;

  /// sum of lambda_j^2
  double purity() const;

  /// Plain-text format: one eigenvalue per line, `#` starts a comment,
  /// blank lines ignored. Values are normalized on load.
  static Spectrum load(const std::filesystem::path& file);

 private:
  std::vector<double> values_;
};

}  // namespace mbc
