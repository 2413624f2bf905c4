// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace braidrl {

/// Seedable random source with portable draws.
///
/// The engine is std::mt19937_64 (fully specified by the standard, so the
/// raw stream is identical on every platform). Bounded and real draws are
/// implemented here instead of through std::uniform_*_distribution, whose
/// output is implementation-defined; this keeps generated datasets
/// byte-identical across compilers.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection for exact uniformity.
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::size_t index_below(std::size_t bound) {
    return static_cast<std::size_t>(uniform_below(bound));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-bound, bound].
  double uniform_symmetric(double bound) { return bound * (2.0 * uniform_real() - 1.0); }

  /// Decorrelated child seed for stream k (e.g. one stream per dataset record).
  static std::uint64_t stream_seed(std::uint64_t base, std::uint64_t k) {
    return split_mix(base + 0x9e3779b97f4a7c15ULL * (k + 1));
  }

  static std::uint64_t split_mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace braidrl
