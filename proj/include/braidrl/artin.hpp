// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <span>
#include <stdexcept>
#include <vector>

#include "braidrl/braid.hpp"

namespace braidrl {

/// A word in the free group F_n, stored as nonzero signed generator indices
/// (+k for x_k, -k for x_k^-1). All functions below keep words freely
/// reduced: no adjacent (g, -g) pair survives.
using FreeWord = std::vector<int>;

/// Thrown when an image word outgrows the configured safety cap. The check
/// then reports a resource limit instead of an answer.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ArtinLimits {
  std::size_t max_image_letters = 10'000'000;
};

/// Unique freely reduced form of a raw word. Entries must be nonzero.
FreeWord reduce(std::span<const int> raw);

/// Reverses and negates (the group inverse of a reduced word is reduced).
FreeWord inverse(const FreeWord& w);

/// Image of w under the automorphism induced by one braid letter g:
///   sigma_i   (g = +i):  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
///   sigma_i^-1 (g = -i): x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
/// Other generators are fixed. The result is freely reduced.
FreeWord apply_braid_letter(int g, const FreeWord& w);

/// Images of the free generators x_1..x_n under a braid word, letters acting
/// left to right. Zeros in the word are skipped.
struct BraidImage {
  std::vector<FreeWord> images;

  bool is_identity() const;
  bool operator==(const BraidImage&) const = default;
};

BraidImage braid_image(const BraidWord& b, const ArtinLimits& limits = {});

/// Exact triviality test: the Artin representation is faithful, so a braid
/// word is trivial iff its automorphism fixes every free generator.
bool is_trivial(const BraidWord& b, const ArtinLimits& limits = {});

struct TimedCheck {
  bool trivial;
  std::chrono::nanoseconds elapsed;
};

/// is_trivial plus its monotonic-clock wall time.
TimedCheck timed_check(const BraidWord& b, const ArtinLimits& limits = {});

} // namespace braidrl
