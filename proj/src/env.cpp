// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/env.hpp"

#include <cmath>
#include <stdexcept>

namespace braidrl {

void EnvConfig::validate() const {
  if (!(step_reward < 0.0) || !(success_reward > 0.0)) {
    throw std::invalid_argument("need step_reward < 0 < success_reward");
  }
  if (!(success_reward > max_steps * std::abs(step_reward))) {
    throw std::invalid_argument(
        "success_reward must exceed max_steps * |step_reward| so solved episodes always "
        "out-score unsolved ones");
  }
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (!(discount > 0.0) || discount > 1.0) {
    throw std::invalid_argument("discount must be in (0, 1]");
  }
}

const char* done_reason_name(DoneReason r) {
  switch (r) {
    case DoneReason::none: return "none";
    case DoneReason::solved: return "solved";
    case DoneReason::step_limit: return "step_limit";
    case DoneReason::dead_end: return "dead_end";
  }
  return "?";
}

Env::Env(ActionTable table, EnvConfig config)
    : table_(std::move(table)), config_(config),
      word_(BraidWord::zeros(table_.strands(), table_.slots())) {
  config_.validate();
  reset(word_);
}

void Env::reset(BraidWord start) {
  if (start.strands() != table_.strands() || start.slots() != table_.slots()) {
    throw std::invalid_argument("word does not match the action grid's strands/slots");
  }
  word_ = std::move(start);
  mask_ = action_mask(word_, table_);
  steps_ = 0;
  if (word_.is_trivial_diagram()) {
    reason_ = DoneReason::solved;
  } else if (mask_empty()) {
    reason_ = DoneReason::dead_end;
  } else {
    reason_ = DoneReason::none;
  }
}

bool Env::mask_empty() const {
  for (std::uint8_t m : mask_) {
    if (m) return false;
  }
  return true;
}

StepOutcome Env::step(int action_id) {
  if (done()) throw std::logic_error("step on a finished episode");
  if (action_id < 0 || action_id >= table_.size() ||
      !mask_[static_cast<std::size_t>(action_id)]) {
    throw std::logic_error("action " + std::to_string(action_id) +
                           " is not applicable to the current word");
  }
  word_ = apply_move(word_, table_.action(action_id));
  mask_ = action_mask(word_, table_);
  ++steps_;

  double reward = config_.step_reward;
  if (word_.is_trivial_diagram()) {
    reward += config_.success_reward;
    reason_ = DoneReason::solved;
  } else if (steps_ >= config_.max_steps) {
    reason_ = DoneReason::step_limit;
  } else if (mask_empty()) {
    reason_ = DoneReason::dead_end;
  }
  return {word_, reward, done(), reason_};
}

double EpisodeTrace::total_reward() const {
  double total = 0.0;
  for (const TraceStep& s : steps) total += s.reward;
  return total;
}

std::vector<double> discounted_returns(std::span<const double> rewards, double gamma) {
  std::vector<double> returns(rewards.size());
  double g = 0.0;
  for (std::size_t i = rewards.size(); i-- > 0;) {
    g = rewards[i] + gamma * g;
    returns[i] = g;
  }
  return returns;
}

} // namespace braidrl
