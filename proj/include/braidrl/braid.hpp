// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace braidrl {

/// How braid letters are presented to the network.
enum class Encoding {
  scaled, ///< letters divided by (n-1), mapping them into [-1, 1]
  raw,    ///< letters fed as-is
};

/// A braid word of fixed length over the generators of B_n.
///
/// Letter +i encodes a clockwise crossing of strands i and i+1 (counting
/// from the bottom), -i the anticlockwise crossing, and 0 an empty slot.
/// The slot count never changes; moves rewrite letters in place.
class BraidWord {
public:
  /// Validates strand/slot counts and every letter. Throws
  /// std::invalid_argument naming the first offending index.
  BraidWord(int strands, int slots, std::vector<int> letters);

  /// The trivial diagram: `slots` empty slots.
  static BraidWord zeros(int strands, int slots);

  int strands() const { return strands_; }
  int slots() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  int letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }

  /// True iff every slot is empty (the episode success predicate).
  bool is_trivial_diagram() const;

  /// Number of nonzero letters.
  int crossing_count() const;

  bool operator==(const BraidWord&) const = default;

  /// Mutable access for the move engine. Callers must keep letters in range.
  std::vector<int>& mutable_letters() { return letters_; }

private:
  int strands_;
  std::vector<int> letters_;
};

/// Network input: the word's letters (scaled or raw) followed by the
/// applicability mask, in that fixed order. Length = slots + mask size.
std::vector<double> to_features(const BraidWord& w, std::span<const std::uint8_t> mask,
                                Encoding encoding = Encoding::scaled);

} // namespace braidrl
