// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "braidrl/braid.hpp"
#include "braidrl/moves.hpp"

namespace braidrl {

/// Reward scheme and episode limits: a small negative reward per move, a
/// large positive reward on reaching the trivial diagram.
struct EnvConfig {
  double step_reward = -1.0;
  double success_reward = 100.0;
  int max_steps = 50;
  double discount = 0.99;

  /// Enforces step_reward < 0 < success_reward and
  /// success_reward > max_steps * |step_reward|, so a solved episode always
  /// out-scores an unsolved one. Throws std::invalid_argument.
  void validate() const;
};

enum class DoneReason : std::uint8_t { none, solved, step_limit, dead_end };

const char* done_reason_name(DoneReason r);

struct StepOutcome {
  BraidWord next;
  double reward;
  bool done;
  DoneReason reason;
};

/// One untangling episode over a fixed action grid. Instances are
/// independent; run one per rollout worker.
class Env {
public:
  Env(ActionTable table, EnvConfig config);

  /// Starts an episode at `start`. A trivial start is immediately done
  /// (solved, 0 steps); a start with no applicable move is a dead end.
  void reset(BraidWord start);

  const BraidWord& word() const { return word_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }
  const ActionTable& table() const { return table_; }
  const EnvConfig& config() const { return config_; }

  bool done() const { return reason_ != DoneReason::none; }
  DoneReason reason() const { return reason_; }
  int steps() const { return steps_; }

  /// Applies the action with the given grid id. The action must be
  /// applicable and the episode not done (std::logic_error otherwise).
  StepOutcome step(int action_id);

private:
  ActionTable table_;
  EnvConfig config_;
  BraidWord word_;
  std::vector<std::uint8_t> mask_;
  int steps_ = 0;
  DoneReason reason_ = DoneReason::none;

  bool mask_empty() const;
};

/// One rollout, the unit of policy-gradient updates.
struct TraceStep {
  std::vector<double> features;
  std::vector<std::uint8_t> mask;
  int action_id;
  double reward;
};

struct EpisodeTrace {
  std::vector<TraceStep> steps;
  bool solved = false;

  double total_reward() const;
};

/// Discounted returns G_t = sum_{k>=t} gamma^{k-t} r_k, computed right to left.
std::vector<double> discounted_returns(std::span<const double> rewards, double gamma);

} // namespace braidrl
