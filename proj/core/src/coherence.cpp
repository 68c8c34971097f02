// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbc/coherence.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "mbc/permutation.hpp"
#include "tensor_index.hpp"

namespace mbc {

namespace {

constexpr double kLn10 = 2.302585092994045684;

void require_order(int n) {
  if (n < 2) {
    throw DomainError("many-body coherence requires N >= 2 (undefined for N = 1)");
  }
}

double log10_or_neg_inf(double value) {
  return value > 0.0 ? std::log10(value) : -std::numeric_limits<double>::infinity();
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::oracle: return "oracle";
    case Method::exact_product: return "exact-product";
    case Method::spectral: return "spectral";
    case Method::asymptote: return "asymptote";
    case Method::faint: return "faint";
  }
  return "unknown";
}

bool CoherenceResult::underflowed() const {
  return value == 0.0 && std::isfinite(log10_value);
}

CoherenceResult coherence_oracle(const DensityMatrix& rho, int n) {
  require_order(n);
  if (n > kOracleMaxParticles) {
    throw SizeLimitError("coherence oracle supports 2 <= N <= 6");
  }
  if (rho.dim() > kProductDimLimit) {
    throw SizeLimitError("internal dimension exceeds the 4096 guard");
  }
  const int m = detail::infer_local_dim(rho.dim(), n);

  double modulus_sum = 0.0;
  const auto perms = enumerate_permutations(n);
  for (const auto& pi : perms) {
    modulus_sum += std::abs(detail::permuted_trace(rho.matrix(), pi, m, n));
  }
  const double count = static_cast<double>(perms.size());
  const double value = std::max(0.0, (modulus_sum - 1.0) / (count - 1.0));
  return {value, log10_or_neg_inf(value), Method::oracle, n, n};
}

ScaledReal h_complete(const Spectrum& spectrum, int degree) {
  if (degree < 0) throw DomainError("polynomial degree must be non-negative");
  if (degree > 1000000) {
    throw SizeLimitError("polynomial degree exceeds the 1e6 resource guard");
  }
  std::vector<ScaledReal> h(static_cast<std::size_t>(degree) + 1);
  h[0] = ScaledReal::one();
  for (double lambda : spectrum.values()) {
    if (lambda == 0.0) continue;
    for (int d = 1; d <= degree; ++d) {
      // ascending d: h[d-1] already holds the current eigenvalue's extension
      h[static_cast<std::size_t>(d)] += lambda * h[static_cast<std::size_t>(d) - 1];
    }
  }
  return h[static_cast<std::size_t>(degree)];
}

CoherenceResult coherence_spectral(const Spectrum& spectrum, int n) {
  require_order(n);
  const ScaledReal h = h_complete(spectrum, n);
  if (n <= kExactFormMaxParticles) {
    const double hv = h.value();
    const double nf = static_cast<double>(permutation_count(n));  // exact <= 20!
    const double value = std::max(0.0, hv - (1.0 - hv) / (nf - 1.0));
    return {value, log10_or_neg_inf(value), Method::exact_product, n, n};
  }
  return {h.value(), h.log10(), Method::spectral, n, n};
}

CoherenceResult coherence_reduced(const Spectrum& spectrum, int n, int k) {
  require_order(n);
  if (k < 2 || k > n) {
    throw DomainError("reduced coherence order requires 2 <= k <= N");
  }
  CoherenceResult result = coherence_spectral(spectrum, k);
  result.particle_count = n;
  return result;
}

double coherence_maximally_mixed(int m, int n) {
  return std::exp(coherence_maximally_mixed_log10(m, n) * kLn10);
}

double coherence_maximally_mixed_log10(int m, int n) {
  if (m < 1) throw DomainError("internal dimension must be >= 1");
  require_order(n);
  // log10 C(n+m-1, m-1) - n log10 m
  double log10_binom = 0.0;
  for (int i = 1; i < m; ++i) {
    log10_binom += std::log10(static_cast<double>(n + i)) -
                   std::log10(static_cast<double>(i));
  }
  return log10_binom - static_cast<double>(n) * std::log10(static_cast<double>(m));
}

double coherence_asymptote(const Spectrum& spectrum, int n, double degeneracy_tol) {
  return std::exp(coherence_asymptote_log10(spectrum, n, degeneracy_tol) * kLn10);
}

double coherence_asymptote_log10(const Spectrum& spectrum, int n, double degeneracy_tol) {
  require_order(n);
  const double lambda_max = spectrum.max();
  if (lambda_max >= 1.0 - 1e-12) {
    throw RegimeError(
        "asymptote undefined for lambda_max = 1 (indistinguishable particles; "
        "the exact coherence is 1)");
  }
  const int d = spectrum.degeneracy(degeneracy_tol);
  double log10_value = static_cast<double>(d - 1) * std::log10(static_cast<double>(n + 1)) +
                       static_cast<double>(n) * std::log10(lambda_max);
  for (std::size_t j = static_cast<std::size_t>(d); j < spectrum.size(); ++j) {
    log10_value -= std::log10(1.0 - spectrum[j] / lambda_max);
  }
  return log10_value;
}

double coherence_faint(double epsilon, int n) {
  require_order(n);
  if (!(epsilon >= 0.0) || !(epsilon < 0.5)) {
    throw RegimeError("faint-distinguishability decay requires 0 <= epsilon < 1/2");
  }
  return std::pow(1.0 - epsilon, n);
}

double oracle_power_sum(const Spectrum& spectrum, int n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw SizeLimitError("power-sum oracle supports 1 <= N <= 8");
  }
  // p_l = sum_j lambda_j^l for every cycle length that can occur
  std::vector<double> power_sum(static_cast<std::size_t>(n) + 1, 0.0);
  for (double lambda : spectrum.values()) {
    double p = 1.0;
    for (int l = 1; l <= n; ++l) {
      p *= lambda;
      power_sum[static_cast<std::size_t>(l)] += p;
    }
  }

  double total = 0.0;
  std::array<char, kMaxEnumerationSize> seen{};
  for_each_permutation(n, [&](const std::vector<int>& images) {
    seen.fill(0);
    double product = 1.0;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      int len = 0;
      for (int j = start; !seen[static_cast<std::size_t>(j)];
           j = images[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++len;
      }
      product *= power_sum[static_cast<std::size_t>(len)];
    }
    total += product;
  });
  return total / static_cast<double>(permutation_count(n));
}

}  // namespace mbc
