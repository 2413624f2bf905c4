// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidrl/env.hpp"
#include "braidrl/rng.hpp"

namespace braidrl {

/// One-hidden-layer feed-forward dimensions. The hidden layer is the number
/// of inputs times the number of strands.
struct NetDims {
  int input;  // slots + actions
  int hidden; // strands * input
  int output; // actions

  static NetDims from_grid(int strands, int slots, int actions);
  std::size_t parameter_count() const;
  bool operator==(const NetDims&) const = default;
};

/// Policy parameters (row-major matrices, all double precision). The config
/// digest pins the action-grid layout and input encoding the net was built
/// for; checkpoints refuse to load into a different layout.
struct PolicyNet {
  NetDims dims;
  std::vector<double> w1; // hidden x input
  std::vector<double> b1; // hidden
  std::vector<double> w2; // output x hidden
  std::vector<double> b2; // output
  std::string config_digest;

  /// Glorot-uniform weights (bound sqrt(6/(fan_in+fan_out))), zero biases.
  static PolicyNet init(NetDims dims, std::string config_digest, Rng& rng);

  bool all_finite() const;
};

/// Masked softmax over the action grid: probabilities at masked-out entries
/// are exactly 0 (excluded from normalization, not just driven small), the
/// rest sum to 1.
struct ActionDistribution {
  std::vector<double> probs;
};

/// h = relu(W1 x + b1); logits = W2 h + b2; softmax over the valid entries
/// only, stabilized by the max valid logit. The mask must have at least one
/// set bit (std::logic_error otherwise: a no-move state ends the episode,
/// it is never fed to the network).
ActionDistribution forward(const PolicyNet& net, std::span<const double> x,
                           std::span<const std::uint8_t> mask);

/// Argmax over valid entries; ties break to the lowest action id.
int select_greedy(const ActionDistribution& d);

/// Draws from the distribution (training-time exploration).
int select_sample(const ActionDistribution& d, Rng& rng);

struct Gradients {
  std::vector<double> w1, b1, w2, b2;

  explicit Gradients(const NetDims& dims);
  void clear();
  bool all_finite() const;
};

/// REINFORCE gradients of loss = -sum_t log pi(a_t|s_t) * (G_t - baseline),
/// accumulated into `grads` by backpropagation through masked softmax,
/// linear, relu, linear. `returns` holds G_t per trace step.
void accumulate_policy_gradient(const PolicyNet& net, const EpisodeTrace& trace,
                                std::span<const double> returns, double baseline,
                                Gradients& grads);

/// Adam optimizer state (beta1=0.9, beta2=0.999, eps=1e-8, bias-corrected).
struct AdamState {
  std::vector<double> m_w1, v_w1, m_b1, v_b1, m_w2, v_w2, m_b2, v_b2;
  long step_count = 0;

  explicit AdamState(const NetDims& dims);
};

/// One Adam update. Throws std::runtime_error on non-finite gradients.
void adam_step(PolicyNet& net, const Gradients& grads, AdamState& state, double lr);

class CheckpointError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Binary checkpoint: magic "BRPN", format version, a JSON header with dims
/// and the config digest, then the raw little-endian f64 parameter arrays.
/// save/load round-trips are bit-exact.
void save_checkpoint(const PolicyNet& net, const std::filesystem::path& path);

struct Checkpoint {
  PolicyNet net;
  int strands;
  int slots;
  bool insertion_enabled;
  Encoding encoding;
};

/// Loads and validates a checkpoint. Throws CheckpointError on a truncated
/// or malformed file; callers must compare config_digest against the action
/// grid they build.
Checkpoint load_checkpoint(const std::filesystem::path& path);

/// Digest tying a net to its action grid and input encoding.
std::string policy_config_digest(const ActionTable& table, Encoding encoding);

} // namespace braidrl
