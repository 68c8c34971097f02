// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbc/photon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

namespace mbc {

namespace {

constexpr double kTraceTolerance = 1e-6;
constexpr double kTruncationFloor = 1e-14;

double gaussian_pdf(double t) {
  return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
}

void validate(const PhotonConfig& config) {
  if (!(config.sigma_delta >= 0.0)) throw DomainError("sigma*Delta must be >= 0");
  if (config.quadrature_points < 16) {
    throw DomainError("photon quadrature needs at least 16 nodes");
  }
  if (!(config.window_halfwidth >= 5.0)) {
    throw DomainError("quadrature window halfwidth must be >= 5 sigma");
  }
}

}  // namespace

TabulatedDensity::TabulatedDensity(std::vector<double> t, std::vector<double> p)
    : t_(std::move(t)), p_(std::move(p)) {
  if (t_.size() != p_.size() || t_.size() < 2) {
    throw DomainError("tabulated density needs at least two (t, P) rows");
  }
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    if (!(t_[i] < t_[i + 1])) {
      throw DomainError("tabulated density times must be strictly ascending");
    }
  }
  for (double v : p_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("tabulated density values must be finite and non-negative");
    }
  }
  // trapezoid moments are exact for the piecewise-linear interpolant
  double mass = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    const double dt = t_[i + 1] - t_[i];
    const double pa = p_[i], pb = p_[i + 1];
    const double ta = t_[i], tb = t_[i + 1];
    mass += 0.5 * dt * (pa + pb);
    m1 += dt * (pa * (2 * ta + tb) + pb * (ta + 2 * tb)) / 6.0;
    m2 += dt * (pa * (3 * ta * ta + 2 * ta * tb + tb * tb) +
                pb * (ta * ta + 2 * ta * tb + 3 * tb * tb)) / 12.0;
  }
  if (!(mass > 0.0)) throw DomainError("tabulated density has zero mass");
  for (double& v : p_) v /= mass;
  mean_ = m1 / mass;
  const double var = m2 / mass - mean_ * mean_;
  if (!(var > 0.0)) throw DomainError("tabulated density must have positive variance");
  stddev_ = std::sqrt(var);
}

TabulatedDensity TabulatedDensity::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open density file: " + file.string());
  std::vector<double> t, p;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const char* ptr = line.data();
    const char* end = line.data() + line.size();
    auto skip_ws = [&] {
      while (ptr != end && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
    };
    skip_ws();
    if (ptr == end) continue;
    double tv = 0.0, pv = 0.0;
    auto r1 = std::from_chars(ptr, end, tv);
    ptr = r1.ptr;
    skip_ws();
    auto r2 = std::from_chars(ptr, end, pv);
    ptr = r2.ptr;
    skip_ws();
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || ptr != end) {
      throw DomainError("density file " + file.string() + ": bad row on line " +
                        std::to_string(lineno));
    }
    t.push_back(tv);
    p.push_back(pv);
  }
  return TabulatedDensity(std::move(t), std::move(p));
}

double TabulatedDensity::operator()(double t) const {
  if (t <= t_.front() || t >= t_.back()) {
    return t == t_.front() ? p_.front() : (t == t_.back() ? p_.back() : 0.0);
  }
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const auto i = static_cast<std::size_t>(it - t_.begin()) - 1;
  const double f = (t - t_[i]) / (t_[i + 1] - t_[i]);
  return p_[i] + f * (p_[i + 1] - p_[i]);
}

Eigen::MatrixXd photon_kernel_matrix(const PhotonConfig& config) {
  validate(config);

  double t0 = 0.0, sigma = 1.0, delta = config.sigma_delta;
  double lo, hi;
  if (config.density) {
    t0 = config.density->mean();
    sigma = config.density->stddev();
    delta = config.sigma_delta / sigma;
    lo = std::max(t0 - config.window_halfwidth * sigma, config.density->t_min());
    hi = std::min(t0 + config.window_halfwidth * sigma, config.density->t_max());
  } else {
    lo = t0 - config.window_halfwidth;
    hi = t0 + config.window_halfwidth;
  }

  const QuadratureRule rule = gauss_legendre(config.quadrature_points, lo, hi);
  const auto nq = static_cast<Eigen::Index>(rule.nodes.size());
  Eigen::VectorXd sqrt_weight(nq);
  double trace = 0.0;
  for (Eigen::Index a = 0; a < nq; ++a) {
    const double t = rule.nodes[static_cast<std::size_t>(a)];
    const double p = config.density ? (*config.density)(t) : gaussian_pdf(t);
    const double wp = rule.weights[static_cast<std::size_t>(a)] * p;
    trace += wp;
    sqrt_weight(a) = std::sqrt(std::max(wp, 0.0));
  }
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw DiscretizationError(
        "discretized arrival-time state misses unit trace by more than 1e-6; "
        "increase --quad-points or widen the window");
  }

  Eigen::MatrixXd kernel(nq, nq);
  for (Eigen::Index a = 0; a < nq; ++a) {
    kernel(a, a) = sqrt_weight(a) * sqrt_weight(a);
    for (Eigen::Index b = 0; b < a; ++b) {
      const double dt = rule.nodes[static_cast<std::size_t>(a)] -
                        rule.nodes[static_cast<std::size_t>(b)];
      const double overlap = std::exp(-0.5 * delta * delta * dt * dt);
      kernel(a, b) = kernel(b, a) = sqrt_weight(a) * sqrt_weight(b) * overlap;
    }
  }
  return kernel;
}

Spectrum photon_spectrum(const PhotonConfig& config) {
  const Eigen::MatrixXd kernel = photon_kernel_matrix(config);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DiscretizationError("kernel eigensolver failed to converge");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(solver.eigenvalues().size()));
  for (Eigen::Index i = solver.eigenvalues().size() - 1; i >= 0; --i) {
    const double v = solver.eigenvalues()(i);
    if (v < kEigenvalueNoiseFloor) {
      throw DiscretizationError(
          "kernel eigenvalue below the -1e-10 noise floor; increase --quad-points");
    }
    if (v > kTruncationFloor) values.push_back(v);
  }
  if (values.empty()) values.push_back(1.0);  // unreachable: trace is 1
  return Spectrum(std::move(values));
}

CoherenceResult photon_coherence(const PhotonConfig& config, int n) {
  return coherence_spectral(photon_spectrum(config), n);
}

double faint_jitter_approx(double sigma_delta, int n) {
  if (n < 2) throw DomainError("many-body coherence requires N >= 2");
  if (!(sigma_delta >= 0.0) || !(sigma_delta < kFaintJitterLimit)) {
    throw RegimeError(
        "faint-jitter form requires sigma*Delta < 1/sqrt(2) (~0.7071)");
  }
  return std::pow(1.0 - sigma_delta * sigma_delta, n);
}

AdmissibleJitter admissible_jitter(double w_target, int n) {
  if (!(w_target > 0.0) || !(w_target < 1.0)) {
    throw DomainError("target coherence must lie strictly inside (0, 1)");
  }
  if (n < 2) throw DomainError("many-body coherence requires N >= 2");
  const double root = std::exp(std::log(w_target) / static_cast<double>(n));
  return {std::sqrt(1.0 - root), std::sqrt((1.0 - w_target) / static_cast<double>(n))};
}

}  // namespace mbc
