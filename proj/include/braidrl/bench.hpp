// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "braidrl/dataset.hpp"
#include "braidrl/policy.hpp"
#include "braidrl/trainer.hpp"

namespace braidrl {

struct BenchRow {
  int crossings;
  int samples;
  double nn_mean_us;   // solved instances only
  double nn_median_us;
  double oracle_mean_us;
  double oracle_median_us;
  double nn_solve_rate;
};

struct BenchParams {
  std::vector<int> crossings;
  int samples = 100;
  int mix_steps = 20;
  std::uint64_t seed = 0;
  int max_steps = 50;
};

/// For each crossing count: generate fresh trivial braids, time (a) the
/// greedy network untangling them (mask computation, forward pass and move
/// application all count) and (b) the Artin oracle proving them trivial.
/// Timing uses the monotonic clock, single-threaded.
std::vector<BenchRow> bench_compare(const PolicyNet& net, const ActionTable& table,
                                    Encoding encoding, const BenchParams& params);

/// header: crossings,samples,nn_mean_us,nn_median_us,oracle_mean_us,oracle_median_us,nn_solve_rate
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

/// Exact minimal move count from w to the trivial diagram by breadth-first
/// search over the move graph, deduplicated on exact words. nullopt when no
/// solution exists within depth_cap.
std::optional<int> bfs_optimal(const BraidWord& w, const ActionTable& table, int depth_cap);

struct GapRow {
  bool solved;
  int nn_steps;      // valid when solved
  int optimal_steps; // from BFS
};

/// Per-braid (nn_steps, optimal_steps) on BFS-solvable words. Keeps the
/// guarantee nn_steps >= optimal_steps for every solved instance.
std::vector<GapRow> optimality_gap(const PolicyNet& net, const ActionTable& table,
                                   Encoding encoding, const std::vector<DatasetRecord>& dataset,
                                   int depth_cap, int max_steps);

} // namespace braidrl
