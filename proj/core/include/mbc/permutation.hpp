// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mbc/errors.hpp"

namespace mbc {

/// Full enumeration of S_N is gated at N = 8 (8! = 40320); larger particle
/// numbers must go through the spectral path.
inline constexpr int kMaxEnumerationSize = 8;

/// Multiset of cycle lengths of a permutation; lengths sum to the degree.
struct CycleType {
  std::vector<int> lengths;  // sorted descending

  int degree() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }
  bool operator==(const CycleType&) const = default;
};

/// Permutation of {0, ..., n-1} in one-line notation: image(i) is where
/// element at position i is sent.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// (a.compose(b))(i) = a(b(i)); both factors must have the same degree.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  /// +1 for even, -1 for odd; equals (-1)^(n - number of cycles).
  int sign() const;
  CycleType cycle_type() const;

  /// Rank of this permutation in the lexicographic enumeration of S_n,
  /// 0 for the identity.
  std::uint64_t lex_rank() const;

  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend std::vector<Permutation> enumerate_permutations(int n);
};

/// n! as an exact 64-bit integer; requires n <= 20.
std::uint64_t permutation_count(int n);

/// All of S_n in lexicographic order of the image sequence, identity first.
/// Throws SizeLimitError beyond kMaxEnumerationSize.
std::vector<Permutation> enumerate_permutations(int n);

/// Streams the image sequences of S_n in lexicographic order (identity first)
/// without materializing Permutation objects; f receives a const reference to
/// the current image vector valid only during the call.
template <typename F>
void for_each_permutation(int n, F&& f) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw SizeLimitError("permutation enumeration supports 1 <= N <= 8");
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    f(const_cast<const std::vector<int>&>(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace mbc
