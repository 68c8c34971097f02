// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbc/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace mbc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw DomainError("permutation must have degree >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("permutation images must be a bijection on {0..n-1}");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation must have degree >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) {
    throw DomainError("cannot compose permutations of different degree");
  }
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = images_[static_cast<std::size_t>(other.images_[i])];
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    images[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(images), Unchecked{});
}

int Permutation::sign() const {
  const CycleType ct = cycle_type();
  const int transpositions = size() - static_cast<int>(ct.lengths.size());
  return (transpositions % 2 == 0) ? 1 : -1;
}

CycleType Permutation::cycle_type() const {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  CycleType ct;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int j = start; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    ct.lengths.push_back(len);
  }
  std::sort(ct.lengths.begin(), ct.lengths.end(), std::greater<>());
  return ct;
}

std::uint64_t Permutation::lex_rank() const {
  // Lehmer code: rank = sum over positions of (#smaller unused to the right) * (n-1-i)!
  const int n = size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)]) ++smaller;
    }
    rank += static_cast<std::uint64_t>(smaller) * permutation_count(n - 1 - i);
  }
  return rank;
}

std::uint64_t permutation_count(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial out of exact 64-bit range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<Permutation> enumerate_permutations(int n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw SizeLimitError("permutation enumeration supports 1 <= N <= 8");
  }
  std::vector<Permutation> out;
  out.reserve(permutation_count(n));
  for_each_permutation(n, [&](const std::vector<int>& images) {
    out.push_back(Permutation(images, Permutation::Unchecked{}));
  });
  return out;
}

}  // namespace mbc
