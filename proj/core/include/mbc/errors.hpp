// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mbc {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument value or failed input validation (bad matrix, bad range,
/// undefined coherence order, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closed-form approximation was requested outside its regime of validity.
/// The message states the regime that was violated.
class RegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An exact-enumeration guard was exceeded (the oracle paths are test
/// instruments for small particle numbers, not a scaling route).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A quadrature-discretized quantity missed its convergence budget; the
/// message suggests how to refine (more nodes, wider window).
class DiscretizationError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mbc
