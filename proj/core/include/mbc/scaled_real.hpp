// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "mbc/errors.hpp"

namespace mbc {

/// Non-negative real number stored as mantissa * 2^exponent with the mantissa
/// kept in [1, 2) and a 64-bit exponent. Survives products of thousands of
/// sub-unit factors (lambda^N for N ~ 1000 underflows a plain double long
/// before it stops being physically meaningful). Exact zero is representable.
///
/// Only the operations the symmetric-polynomial recurrences need are
/// provided: accumulation (+) and scaling (*); both operands non-negative.
class ScaledReal {
 public:
  /// Exact zero.
  constexpr ScaledReal() = default;

  explicit ScaledReal(double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("ScaledReal requires a finite non-negative value");
    }
    if (v != 0.0) {
      int e = 0;
      mantissa_ = 2.0 * std::frexp(v, &e);  // frexp mantissa is in [0.5, 1)
      exponent_ = static_cast<std::int64_t>(e) - 1;
    }
  }

  static ScaledReal one() { return ScaledReal(1.0); }

  bool is_zero() const { return mantissa_ == 0.0; }
  double mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }

  /// Value as a plain double; silently 0 (or inf) outside double range.
  double value() const {
    if (is_zero()) return 0.0;
    if (exponent_ > 1024) return std::numeric_limits<double>::infinity();
    if (exponent_ < -1200) return 0.0;
    return std::ldexp(mantissa_, static_cast<int>(exponent_));
  }

  /// log10 of the stored value; -inf for zero. Finite even when value()
  /// has underflowed.
  double log10() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log10(mantissa_) + static_cast<double>(exponent_) * kLog10Of2;
  }

  ScaledReal& operator+=(const ScaledReal& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
      *this = other;
      return *this;
    }
    const std::int64_t d = other.exponent_ - exponent_;
    if (d > 1100) {
      *this = other;
    } else if (d >= -1100) {
      if (d > 0) {
        mantissa_ = other.mantissa_ + std::ldexp(mantissa_, static_cast<int>(-d));
        exponent_ = other.exponent_;
      } else {
        mantissa_ += std::ldexp(other.mantissa_, static_cast<int>(d));
      }
      normalize();
    }
    return *this;
  }

  ScaledReal& operator*=(const ScaledReal& other) {
    if (is_zero() || other.is_zero()) return *this = ScaledReal();
    mantissa_ *= other.mantissa_;  // in [1, 4)
    exponent_ += other.exponent_;
    normalize();
    return *this;
  }

  ScaledReal& operator*=(double scale) { return *this *= ScaledReal(scale); }

  friend ScaledReal operator+(ScaledReal a, const ScaledReal& b) { return a += b; }
  friend ScaledReal operator*(ScaledReal a, const ScaledReal& b) { return a *= b; }
  friend ScaledReal operator*(ScaledReal a, double s) { return a *= s; }
  friend ScaledReal operator*(double s, ScaledReal a) { return a *= s; }

  friend bool operator<(const ScaledReal& a, const ScaledReal& b) {
    if (a.is_zero() || b.is_zero()) return !b.is_zero();
    if (a.exponent_ != b.exponent_) return a.exponent_ < b.exponent_;
    return a.mantissa_ < b.mantissa_;
  }

 private:
  void normalize() {
    int e = 0;
    mantissa_ = 2.0 * std::frexp(mantissa_, &e);
    exponent_ += static_cast<std::int64_t>(e) - 1;
  }

  static constexpr double kLog10Of2 = 0.30102999566398119521;

  double mantissa_ = 0.0;  // 0, or in [1, 2)
  std::int64_t exponent_ = 0;
};

}  // namespace mbc
