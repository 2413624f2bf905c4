// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "braidrl/dataset.hpp"
#include "braidrl/env.hpp"
#include "braidrl/policy.hpp"

namespace braidrl {

struct TrainConfig {
  int iterations = 10'000;
  int episodes_per_iteration = 2;
  EnvConfig env;
  double lr = 1e-3;
  double baseline_decay = 0.99;
  int eval_every = 500;
  int eval_set_size = 500;
  std::uint64_t seed = 0;
  Encoding encoding = Encoding::scaled;
  bool insertion_enabled = false;

  void validate() const;
};

struct MetricsRow {
  int iteration;
  double untangle_rate;
  double mean_steps;  // over solved eval episodes; 0 when none solved
  double mean_return; // undiscounted, over all eval episodes
  double elapsed_s;
};

struct Metrics {
  std::vector<MetricsRow> rows;

  void write_csv(std::ostream& os) const; // header: iteration,untangle_rate,...
};

struct TrainResult {
  PolicyNet net;
  Metrics metrics;
  double final_rate = 0.0;
};

/// REINFORCE training: per iteration, roll out episodes_per_iteration
/// sampled episodes on braids drawn uniformly from the first 90% of the
/// dataset, accumulate policy gradients against a decayed-mean baseline,
/// and take one Adam step. Greedy metrics on the held-out 10% are emitted
/// at iteration 0, every eval_every iterations, and at the end.
/// Single-threaded and fully deterministic under (config, dataset).
TrainResult train(const TrainConfig& cfg, const std::vector<DatasetRecord>& dataset,
                  std::ostream* log = nullptr);

struct EvalOutcome {
  bool solved;
  int steps;
  double episode_return;
};

struct EvalResult {
  double untangle_rate = 0.0;
  double mean_steps = 0.0;  // solved episodes only
  double mean_return = 0.0; // all episodes
  std::vector<EvalOutcome> outcomes;
};

/// Greedy rollout per braid; solved iff the trivial diagram is reached
/// within env.max_steps. Each solved outcome is re-certified: the final
/// word is all zeros and the start word passes the Artin oracle.
EvalResult evaluate(const PolicyNet& net, const ActionTable& table, Encoding encoding,
                    const std::vector<DatasetRecord>& dataset, const EnvConfig& env_cfg);

/// Greedy rollout of one word; returns (solved, steps, applied action ids).
struct SolveResult {
  bool solved;
  int steps;
  std::vector<int> actions;
};
SolveResult greedy_solve(const PolicyNet& net, const ActionTable& table, Encoding encoding,
                         const BraidWord& start, int max_steps);

enum class SweepAxis { crossings, max_steps };

struct SweepRow {
  int value;
  double untangle_rate;
  double mean_steps;
};

/// crossings axis: trains one model per dataset (values[i] labels
/// datasets[i]) and evaluates each on its held-out split. max_steps axis:
/// trains once on datasets[0], then evaluates the fixed checkpoint at each
/// step budget.
std::vector<SweepRow> sweep(const TrainConfig& cfg, SweepAxis axis,
                            const std::vector<int>& values,
                            const std::vector<std::vector<DatasetRecord>>& datasets,
                            std::ostream* log = nullptr);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

} // namespace braidrl
