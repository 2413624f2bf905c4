// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/moves.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidrl {

namespace {

bool same_sign(int a, int b) { return (a > 0) == (b > 0); }

bool braid_pattern(int a, int b) {
  // adjacent generator indices, matching signs, both nonzero
  return a != 0 && b != 0 && same_sign(a, b) && std::abs(std::abs(a) - std::abs(b)) == 1;
}

} // namespace

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::cancel: return "cancel";
    case MoveKind::commute: return "commute";
    case MoveKind::braid_same: return "braid_same";
    case MoveKind::braid_conj_l: return "braid_conj_l";
    case MoveKind::braid_conj_r: return "braid_conj_r";
    case MoveKind::insert: return "insert";
  }
  return "?";
}

ActionTable::ActionTable(int strands, int slots, bool insertion_enabled)
    : strands_(strands), slots_(slots), insertion_enabled_(insertion_enabled) {
  if (strands < 2 || slots < 1) {
    throw std::invalid_argument("action table needs strands >= 2 and slots >= 1");
  }
  std::vector<MoveAction> kinds = {
      {MoveKind::cancel, 0, 0},       {MoveKind::commute, 0, 0},
      {MoveKind::braid_same, 0, 0},   {MoveKind::braid_conj_l, 0, 0},
      {MoveKind::braid_conj_r, 0, 0},
  };
  if (insertion_enabled) {
    for (int g = 1; g < strands; ++g) kinds.push_back({MoveKind::insert, g, 0});
    for (int g = 1; g < strands; ++g) kinds.push_back({MoveKind::insert, -g, 0});
  }
  kind_rows_ = static_cast<int>(kinds.size());
  actions_.reserve(static_cast<std::size_t>(kind_rows_) * slots);
  for (const MoveAction& k : kinds) {
    for (int p = 0; p < slots; ++p) actions_.push_back({k.kind, k.gen, p});
  }
}

int ActionTable::id_of(const MoveAction& a) const {
  for (int row = 0; row < kind_rows_; ++row) {
    const MoveAction& probe = actions_[static_cast<std::size_t>(row) * slots_];
    if (probe.kind == a.kind && probe.gen == a.gen) return row * slots_ + a.pos;
  }
  throw std::invalid_argument("action kind not in table");
}

std::string ActionTable::layout_digest() const {
  std::string d = "grid:v1;n=" + std::to_string(strands_) + ";L=" + std::to_string(slots_) +
                  ";kinds=";
  for (int row = 0; row < kind_rows_; ++row) {
    const MoveAction& a = actions_[static_cast<std::size_t>(row) * slots_];
    if (row) d += ',';
    d += move_kind_name(a.kind);
    if (a.kind == MoveKind::insert) {
      d += a.gen > 0 ? '+' : '-';
      d += std::to_string(std::abs(a.gen));
    }
  }
  return d;
}

bool applicable(const BraidWord& w, const MoveAction& a) {
  const std::vector<int>& v = w.letters();
  const int L = w.slots();
  const int p = a.pos;
  switch (a.kind) {
    case MoveKind::cancel: {
      if (p + 1 >= L) return false;
      return v[p] != 0 && v[p + 1] == -v[p];
    }
    case MoveKind::commute: {
      if (p + 1 >= L) return false;
      const int x = v[p], y = v[p + 1];
      if (x == y) return false;
      return x == 0 || y == 0 || std::abs(std::abs(x) - std::abs(y)) >= 2;
    }
    case MoveKind::braid_same: {
      if (p + 2 >= L) return false;
      return v[p + 2] == v[p] && braid_pattern(v[p], v[p + 1]);
    }
    case MoveKind::braid_conj_l: {
      if (p + 2 >= L) return false;
      return v[p + 2] == -v[p] && braid_pattern(v[p], v[p + 1]);
    }
    case MoveKind::braid_conj_r: {
      if (p + 2 >= L) return false;
      return v[p + 2] == -v[p] && braid_pattern(-v[p], v[p + 1]);
    }
    case MoveKind::insert: {
      if (p + 1 >= L) return false;
      return v[p] == 0 && v[p + 1] == 0;
    }
  }
  return false;
}

std::vector<std::uint8_t> action_mask(const BraidWord& w, const ActionTable& table) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(table.size()));
  for (int j = 0; j < table.size(); ++j) {
    mask[static_cast<std::size_t>(j)] = applicable(w, table.action(j)) ? 1 : 0;
  }
  return mask;
}

BraidWord apply_move(const BraidWord& w, const MoveAction& a) {
  if (!applicable(w, a)) {
    throw std::logic_error(std::string("move ") + describe(a) + " not applicable");
  }
  BraidWord out = w;
  std::vector<int>& v = out.mutable_letters();
  const int p = a.pos;
  switch (a.kind) {
    case MoveKind::cancel:
      v[p] = 0;
      v[p + 1] = 0;
      break;
    case MoveKind::commute:
      std::swap(v[p], v[p + 1]);
      break;
    case MoveKind::braid_same: {
      const int x = v[p], y = v[p + 1];
      v[p] = y;
      v[p + 1] = x;
      v[p + 2] = y;
      break;
    }
    case MoveKind::braid_conj_l: {
      // (a,b,-a) -> (-b,a,b)
      const int x = v[p], y = v[p + 1];
      v[p] = -y;
      v[p + 1] = x;
      v[p + 2] = y;
      break;
    }
    case MoveKind::braid_conj_r: {
      // (-a,b,a) -> (b,a,-b)
      const int x = -v[p], y = v[p + 1];
      v[p] = y;
      v[p + 1] = x;
      v[p + 2] = -y;
      break;
    }
    case MoveKind::insert:
      v[p] = a.gen;
      v[p + 1] = -a.gen;
      break;
  }
  return out;
}

std::string describe(const MoveAction& a) {
  std::string s = move_kind_name(a.kind);
  if (a.kind == MoveKind::insert) {
    s += '(';
    s += a.gen > 0 ? '+' : '-';
    s += std::to_string(std::abs(a.gen));
    s += ')';
  }
  return s + "@" + std::to_string(a.pos);
}

} // namespace braidrl
