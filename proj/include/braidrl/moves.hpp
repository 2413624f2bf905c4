// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidrl/braid.hpp"

namespace braidrl {

/// Reidemeister-style rewrites on fixed-length braid words.
///
/// cancel       (a,-a)   -> (0,0)      two-crossing window
/// commute      (a, b)   -> (b, a)     when one is 0 or ||a|-|b|| >= 2
/// braid_same   (a,b,a)  -> (b,a,b)    same sign, ||a|-|b|| = 1
/// braid_conj_l (a,b,-a) -> (-b,a,b)   same sign, ||a|-|b|| = 1
/// braid_conj_r (-a,b,a) -> (b,a,-b)   same sign, ||a|-|b|| = 1
/// insert       (0,0)    -> (g,-g)     one kind per signed generator, off by default
enum class MoveKind : std::uint8_t {
  cancel,
  commute,
  braid_same,
  braid_conj_l,
  braid_conj_r,
  insert,
};

const char* move_kind_name(MoveKind k);

/// One entry of the action grid: a move kind anchored at the leftmost slot
/// of its window. `gen` is the signed generator for insert kinds, 0 otherwise.
struct MoveAction {
  MoveKind kind;
  int gen;
  int pos;

  bool operator==(const MoveAction&) const = default;
};

/// The flat action grid: K kinds x L positions, id = kind_row * L + pos.
///
/// Kind rows are ordered cancel, commute, braid_same, braid_conj_l,
/// braid_conj_r, then (when insertion is enabled) insert(+1)..insert(+(n-1)),
/// insert(-1)..insert(-(n-1)). This order is versioned: it defines the
/// network output layout and is recorded in checkpoints.
class ActionTable {
public:
  ActionTable(int strands, int slots, bool insertion_enabled = false);

  int size() const { return static_cast<int>(actions_.size()); }
  int kind_rows() const { return kind_rows_; }
  int strands() const { return strands_; }
  int slots() const { return slots_; }
  bool insertion_enabled() const { return insertion_enabled_; }

  const MoveAction& action(int id) const { return actions_[static_cast<std::size_t>(id)]; }
  int id_of(const MoveAction& a) const;

  /// Versioned description of the grid layout, compared on checkpoint load.
  std::string layout_digest() const;

private:
  int strands_;
  int slots_;
  int kind_rows_;
  bool insertion_enabled_;
  std::vector<MoveAction> actions_;
};

/// True iff the kind's pattern matches w at the action's position.
bool applicable(const BraidWord& w, const MoveAction& a);

/// mask[j] = applicable(w, table.action(j)).
std::vector<std::uint8_t> action_mask(const BraidWord& w, const ActionTable& table);

/// Applies an applicable move, returning a fresh word of the same length.
/// Throws std::logic_error if the move does not match.
BraidWord apply_move(const BraidWord& w, const MoveAction& a);

/// Trace form "kind@pos" (insert moves print the generator too).
std::string describe(const MoveAction& a);

} // namespace braidrl
