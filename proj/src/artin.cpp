// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/artin.hpp"

#include <cstdlib>
#include <string>

namespace braidrl {

namespace {

// Push a letter, cancelling against the top of the stack. Concatenating
// reduced segments this way yields a reduced word.
inline void push_reduced(FreeWord& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

FreeWord substitute(int g, const FreeWord& w, std::size_t cap) {
  const int i = std::abs(g);
  FreeWord out;
  out.reserve(w.size() + w.size() / 2 + 4);
  for (int letter : w) {
    const int a = std::abs(letter);
    if (g > 0) {
      if (a == i) {
        if (letter > 0) { // x_i -> x_i x_{i+1} x_i^-1
          push_reduced(out, i);
          push_reduced(out, i + 1);
          push_reduced(out, -i);
        } else {
          push_reduced(out, i);
          push_reduced(out, -(i + 1));
          push_reduced(out, -i);
        }
      } else if (a == i + 1) { // x_{i+1} -> x_i
        push_reduced(out, letter > 0 ? i : -i);
      } else {
        push_reduced(out, letter);
      }
    } else {
      if (a == i) { // x_i -> x_{i+1}
        push_reduced(out, letter > 0 ? i + 1 : -(i + 1));
      } else if (a == i + 1) {
        if (letter > 0) { // x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
          push_reduced(out, -(i + 1));
          push_reduced(out, i);
          push_reduced(out, i + 1);
        } else {
          push_reduced(out, -(i + 1));
          push_reduced(out, -i);
          push_reduced(out, i + 1);
        }
      } else {
        push_reduced(out, letter);
      }
    }
  }
  if (out.size() > cap) {
    throw ResourceLimitError("free-group image exceeded " + std::to_string(cap) + " letters");
  }
  return out;
}

} // namespace

FreeWord reduce(std::span<const int> raw) {
  FreeWord out;
  out.reserve(raw.size());
  for (int letter : raw) {
    if (letter == 0) throw std::invalid_argument("free word letters must be nonzero");
    push_reduced(out, letter);
  }
  return out;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

FreeWord apply_braid_letter(int g, const FreeWord& w) {
  if (g == 0) throw std::invalid_argument("braid letter must be nonzero");
  return substitute(g, w, ArtinLimits{}.max_image_letters);
}

bool BraidImage::is_identity() const {
  for (std::size_t k = 0; k < images.size(); ++k) {
    const FreeWord& w = images[k];
    if (w.size() != 1 || w[0] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

BraidImage braid_image(const BraidWord& b, const ArtinLimits& limits) {
  BraidImage result;
  result.images.reserve(static_cast<std::size_t>(b.strands()));
  for (int k = 1; k <= b.strands(); ++k) {
    FreeWord w{k};
    for (int g : b.letters()) {
      if (g == 0) continue;
      w = substitute(g, w, limits.max_image_letters);
    }
    result.images.push_back(std::move(w));
  }
  return result;
}

bool is_trivial(const BraidWord& b, const ArtinLimits& limits) {
  // Images are independent; bail at the first moved generator.
  for (int k = 1; k <= b.strands(); ++k) {
    FreeWord w{k};
    for (int g : b.letters()) {
      if (g == 0) continue;
      w = substitute(g, w, limits.max_image_letters);
    }
    if (w.size() != 1 || w[0] != k) return false;
  }
  return true;
}

TimedCheck timed_check(const BraidWord& b, const ArtinLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const bool trivial = is_trivial(b, limits);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return {trivial, std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
}

} // namespace braidrl
