// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/braid.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace braidrl {

BraidWord::BraidWord(int strands, int slots, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2) {
    throw std::invalid_argument("braid needs at least 2 strands, got " + std::to_string(strands));
  }
  if (slots < 1) {
    throw std::invalid_argument("braid word needs at least 1 slot, got " + std::to_string(slots));
  }
  if (static_cast<int>(letters_.size()) != slots) {
    throw std::invalid_argument("expected " + std::to_string(slots) + " letters, got " +
                                std::to_string(letters_.size()));
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (std::abs(letters_[i]) > strands - 1) {
      throw std::invalid_argument("letter " + std::to_string(letters_[i]) + " at index " +
                                  std::to_string(i) + " out of range for " +
                                  std::to_string(strands) + " strands");
    }
  }
}

BraidWord BraidWord::zeros(int strands, int slots) {
  return BraidWord(strands, slots, std::vector<int>(static_cast<std::size_t>(slots), 0));
}

bool BraidWord::is_trivial_diagram() const {
  for (int e : letters_) {
    if (e != 0) return false;
  }
  return true;
}

int BraidWord::crossing_count() const {
  int c = 0;
  for (int e : letters_) {
    if (e != 0) ++c;
  }
  return c;
}

std::vector<double> to_features(const BraidWord& w, std::span<const std::uint8_t> mask,
                                Encoding encoding) {
  std::vector<double> out;
  out.reserve(w.letters().size() + mask.size());
  const double scale = encoding == Encoding::scaled ? 1.0 / (w.strands() - 1) : 1.0;
  for (int e : w.letters()) out.push_back(scale * e);
  for (std::uint8_t m : mask) out.push_back(m ? 1.0 : 0.0);
  return out;
}

} // namespace braidrl
