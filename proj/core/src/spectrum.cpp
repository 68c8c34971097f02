// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbc/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

namespace mbc {

Spectrum::Spectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {
  if (values_.empty()) throw DomainError("spectrum must contain at least one eigenvalue");
  double sum = 0.0;
  for (double& v : values_) {
    if (!std::isfinite(v)) throw DomainError("spectrum eigenvalues must be finite");
    if (v < kEigenvalueNoiseFloor) {
      throw DomainError("spectrum eigenvalue below the -1e-10 noise floor");
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (sum <= 0.0) throw DomainError("spectrum must have positive total weight");
  for (double& v : values_) v /= sum;
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

int Spectrum::degeneracy(double rel_tol) const {
  const double lead = values_.front();
  if (lead <= 0.0) return static_cast<int>(values_.size());
  int d = 0;
  for (double v : values_) {
    if ((lead - v) / lead > rel_tol) break;
    ++d;
  }
  return d;
}

double Spectrum::purity() const {
  double p = 0.0;
  for (double v : values_) p += v * v;
  return p;
}

Spectrum Spectrum::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open spectrum file: " + file.string());
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
      throw DomainError("spectrum file " + file.string() + ": bad value on line " +
                        std::to_string(lineno));
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw DomainError("spectrum file " + file.string() + " contains no eigenvalues");
  }
  return Spectrum(std::move(values));
}

}  // namespace mbc
