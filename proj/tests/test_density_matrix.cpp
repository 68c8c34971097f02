// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mbc/density_matrix.hpp"
#include "test_util.hpp"

using mbc::DensityMatrix;
using mbc::Spectrum;

TEST_CASE("construction validates Hermiticity and trace") {
  Eigen::MatrixXcd bad_herm(2, 2);
  bad_herm << 0.5, std::complex<double>(0.1, 0.2), std::complex<double>(0.1, 0.1), 0.5;
  CHECK_THROWS_AS((void)DensityMatrix(bad_herm), mbc::DomainError);

  Eigen::MatrixXcd bad_trace = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS((void)DensityMatrix(bad_trace), mbc::DomainError);

  CHECK_NOTHROW(DensityMatrix(Eigen::MatrixXcd::Identity(2, 2) * 0.5));
}

TEST_CASE("product state of trivial and diagonal inputs") {
  const auto one = DensityMatrix(Eigen::MatrixXcd::Identity(1, 1));
  CHECK(mbc::product_state(one, 3).dim() == 1);
  CHECK(mbc::product_state(one, 3).matrix()(0, 0).real() == doctest::Approx(1.0));

  const auto half = DensityMatrix::diagonal(Spectrum({0.5, 0.5}));
  const auto half2 = mbc::product_state(half, 2);
  CHECK(half2.dim() == 4);
  for (int i = 0; i < 4; ++i) CHECK(half2.matrix()(i, i).real() == doctest::Approx(0.25));

  const auto biased = DensityMatrix::diagonal(Spectrum({0.7, 0.3}));
  const auto biased2 = mbc::product_state(biased, 2);
  CHECK(biased2.matrix()(0, 0).real() == doctest::Approx(0.49));
  CHECK(biased2.matrix()(1, 1).real() == doctest::Approx(0.21));
  CHECK(biased2.matrix()(2, 2).real() == doctest::Approx(0.21));
  CHECK(biased2.matrix()(3, 3).real() == doctest::Approx(0.09));
  CHECK(std::abs(biased2.matrix().trace() - std::complex<double>(1.0)) < 1e-12);
}

TEST_CASE("product state guard") {
  const auto half = DensityMatrix::diagonal(Spectrum({0.5, 0.5}));
  CHECK_NOTHROW((void)mbc::product_state(half, 12));  // 2^12 = 4096, at the limit
  CHECK_THROWS_AS((void)mbc::product_state(half, 13), mbc::SizeLimitError);
}

TEST_CASE("eigen_spectrum on known matrices") {
  CHECK(mbc::eigen_spectrum(DensityMatrix::diagonal(Spectrum({0.5, 0.5})))[0] ==
        doctest::Approx(0.5));

  Eigen::VectorXcd e0(2);
  e0 << 1.0, 0.0;
  const Spectrum pure = mbc::eigen_spectrum(DensityMatrix::pure(e0));
  CHECK(pure[0] == doctest::Approx(1.0));
  CHECK(pure[1] == doctest::Approx(0.0));

  Eigen::MatrixXcd mixed(2, 2);
  mixed << 0.6, 0.2, 0.2, 0.4;
  const Spectrum s = mbc::eigen_spectrum(DensityMatrix(mixed));
  // roots of l^2 - l + 0.2: 0.5 +- sqrt(0.05)
  CHECK(s[0] == doctest::Approx(0.5 + std::sqrt(0.05)).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(0.5 - std::sqrt(0.05)).epsilon(1e-12));
}

TEST_CASE("eigen_spectrum roundtrip on diagonal states") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Spectrum in = mbctest::random_spectrum(rng, 5);
    const Spectrum out = mbc::eigen_spectrum(DensityMatrix::diagonal(in));
    for (std::size_t j = 0; j < in.size(); ++j) {
      CHECK(out[j] == doctest::Approx(in[j]).epsilon(1e-10));
    }
  }
}

TEST_CASE("eigen-decomposition reconstructs random states") {
  std::mt19937_64 rng(32);
  for (int dim : {2, 3, 8, 16}) {
    const auto rho = mbctest::random_density(rng, dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
    Eigen::MatrixXcd rebuilt = solver.eigenvectors() *
                               solver.eigenvalues().asDiagonal() *
                               solver.eigenvectors().adjoint();
    CHECK((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(rho.min_eigenvalue() > mbc::kEigenvalueNoiseFloor);
  }
}

TEST_CASE("product-state spectrum is the N-fold eigenvalue products") {
  std::mt19937_64 rng(33);
  for (int m = 2; m <= 3; ++m) {
    for (int n = 2; n <= 3; ++n) {
      const auto rho1p = mbctest::random_density(rng, m);
      const Spectrum single = mbc::eigen_spectrum(rho1p);
      const Spectrum full = mbc::eigen_spectrum(mbc::product_state(rho1p, n));

      std::vector<double> expected;
      auto rec = [&](auto&& self, int depth, double prod) -> void {
        if (depth == n) {
          expected.push_back(prod);
          return;
        }
        for (std::size_t j = 0; j < single.size(); ++j) self(self, depth + 1, prod * single[j]);
      };
      rec(rec, 0, 1.0);
      std::sort(expected.begin(), expected.end(), std::greater<>());
      REQUIRE(full.size() == expected.size());
      for (std::size_t j = 0; j < expected.size(); ++j) {
        CHECK(full[j] == doctest::Approx(expected[j]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("faint decomposition of a pure state has no residual") {
  Eigen::VectorXcd phi(2);
  phi << 1.0, 0.0;
  const auto dec = mbc::faint_decomposition(DensityMatrix::pure(phi), phi);
  CHECK(dec.epsilon == doctest::Approx(0.0));
  CHECK_FALSE(dec.residual.has_value());
}

TEST_CASE("faint decomposition solves the split") {
  Eigen::VectorXcd phi(2);
  phi << 1.0, 0.0;
  const auto rho = DensityMatrix::diagonal(Spectrum({0.9, 0.1}));
  const auto dec = mbc::faint_decomposition(rho, phi);
  CHECK(dec.epsilon == doctest::Approx(0.1));
  REQUIRE(dec.residual.has_value());
  CHECK(dec.residual->matrix()(0, 0).real() == doctest::Approx(0.0));
  CHECK(dec.residual->matrix()(1, 1).real() == doctest::Approx(1.0));
  CHECK_FALSE(dec.residual_nonpositive);
}

TEST_CASE("faint decomposition regime guard") {
  Eigen::VectorXcd phi(2);
  phi << 1.0, 0.0;
  // <phi|rho|phi> = 0.4 <= 1/2 (eigenvalue order matters, so build directly)
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = 0.4;
  m(1, 1) = 0.6;
  CHECK_THROWS_AS((void)mbc::faint_decomposition(DensityMatrix(m), phi),
                  mbc::RegimeError);
}

TEST_CASE("faint decomposition recomposes and flags indefinite residuals") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = mbctest::random_density(rng, 3);
    // use the dominant eigenvector so the weight clears 1/2 for most draws
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
    Eigen::VectorXcd phi = solver.eigenvectors().col(2);
    const double weight = solver.eigenvalues()(2);
    if (weight <= 0.5) continue;
    const auto dec = mbc::faint_decomposition(rho, phi);
    REQUIRE(dec.residual.has_value());
    Eigen::MatrixXcd rebuilt = (1.0 - dec.epsilon) * (phi * phi.adjoint()) +
                               dec.epsilon * dec.residual->matrix();
    CHECK((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }

  // deliberately indefinite residual: rho = 0.8|e0><e0| + 0.2 * rho~ with
  // rho~ = [[0, .5], [.5, 1]] (eigenvalues (1 +- sqrt(2))/2)
  Eigen::MatrixXcd rho(2, 2);
  rho << 0.8, 0.1, 0.1, 0.2;
  Eigen::VectorXcd e0(2);
  e0 << 1.0, 0.0;
  const auto dec = mbc::faint_decomposition(DensityMatrix(rho), e0);
  CHECK(dec.epsilon == doctest::Approx(0.2));
  CHECK(dec.residual_nonpositive);
}

TEST_CASE("pure product spec validates and builds") {
  Eigen::VectorXcd a(2), b(2);
  a << 1.0, 0.0;
  b << 0.0, 1.0;
  const mbc::PureProductSpec spec({a, b});
  const auto rho = spec.to_density();
  CHECK(rho.dim() == 4);
  CHECK(rho.matrix()(1, 1).real() == doctest::Approx(1.0));  // |01><01|

  Eigen::VectorXcd not_unit(2);
  not_unit << 0.5, 0.0;
  CHECK_THROWS_AS(mbc::PureProductSpec({a, not_unit}), mbc::DomainError);
  Eigen::VectorXcd other_dim(3);
  other_dim << 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(mbc::PureProductSpec({a, other_dim}), mbc::DomainError);
}
