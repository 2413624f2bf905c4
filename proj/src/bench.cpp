// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "braidrl/artin.hpp"
#include "braidrl/scramble.hpp"

namespace braidrl {

namespace {

double mean_us(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double median_us(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

} // namespace

std::vector<BenchRow> bench_compare(const PolicyNet& net, const ActionTable& table,
                                    Encoding encoding, const BenchParams& params) {
  if (params.samples < 1) throw std::invalid_argument("need at least one sample per row");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;

  for (int crossings : params.crossings) {
    GenParams gen;
    gen.strands = table.strands();
    gen.slots = table.slots();
    gen.crossings = crossings;
    gen.mix_steps = params.mix_steps;
    gen.seed = Rng::stream_seed(params.seed, static_cast<std::uint64_t>(crossings));

    const std::vector<DatasetRecord> records =
        generate_records(static_cast<std::size_t>(params.samples), gen);

    std::vector<double> nn_us;
    std::vector<double> oracle_us;
    int solved = 0;
    for (const DatasetRecord& rec : records) {
      const BraidWord word = rec.to_word();

      const auto t0 = clock::now();
      const SolveResult s = greedy_solve(net, table, encoding, word, params.max_steps);
      const auto t1 = clock::now();
      if (s.solved) {
        ++solved;
        nn_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
      }

      const TimedCheck check = timed_check(word);
      if (!check.trivial) throw std::logic_error("benchmark braid failed the oracle");
      oracle_us.push_back(
          std::chrono::duration<double, std::micro>(check.elapsed).count());
    }

    rows.push_back({crossings, params.samples, mean_us(nn_us), median_us(nn_us),
                    mean_us(oracle_us), median_us(oracle_us),
                    static_cast<double>(solved) / static_cast<double>(params.samples)});
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "crossings,samples,nn_mean_us,nn_median_us,oracle_mean_us,oracle_median_us,"
        "nn_solve_rate\n";
  for (const BenchRow& r : rows) {
    os << r.crossings << ',' << r.samples << ',' << r.nn_mean_us << ',' << r.nn_median_us << ','
       << r.oracle_mean_us << ',' << r.oracle_median_us << ',' << r.nn_solve_rate << '\n';
  }
}

namespace {

struct WordHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

} // namespace

std::optional<int> bfs_optimal(const BraidWord& start, const ActionTable& table, int depth_cap) {
  if (depth_cap < 0) throw std::invalid_argument("depth cap must be >= 0");
  if (start.is_trivial_diagram()) return 0;
  if (depth_cap == 0) return std::nullopt;

  std::unordered_map<std::vector<int>, int, WordHash> depth;
  std::deque<BraidWord> frontier;
  depth.emplace(start.letters(), 0);
  frontier.push_back(start);

  while (!frontier.empty()) {
    const BraidWord word = std::move(frontier.front());
    frontier.pop_front();
    const int d = depth.at(word.letters());
    if (d == depth_cap) continue;
    for (int id = 0; id < table.size(); ++id) {
      if (!applicable(word, table.action(id))) continue;
      BraidWord next = apply_move(word, table.action(id));
      if (next.is_trivial_diagram()) return d + 1;
      auto [it, inserted] = depth.emplace(next.letters(), d + 1);
      if (inserted) frontier.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

std::vector<GapRow> optimality_gap(const PolicyNet& net, const ActionTable& table,
                                   Encoding encoding, const std::vector<DatasetRecord>& dataset,
                                   int depth_cap, int max_steps) {
  std::vector<GapRow> rows;
  rows.reserve(dataset.size());
  for (const DatasetRecord& rec : dataset) {
    const BraidWord word = rec.to_word();
    const auto optimal = bfs_optimal(word, table, depth_cap);
    if (!optimal) {
      throw std::invalid_argument("braid exceeds the BFS depth cap; raise it or shrink the data");
    }
    const SolveResult s = greedy_solve(net, table, encoding, word, max_steps);
    rows.push_back({s.solved, s.steps, *optimal});
  }
  return rows;
}

} // namespace braidrl
