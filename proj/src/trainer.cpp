// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "braidrl/artin.hpp"

namespace braidrl {

void TrainConfig::validate() const {
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (episodes_per_iteration < 1) throw std::invalid_argument("episodes_per_iteration must be >= 1");
  if (!(lr > 0.0)) throw std::invalid_argument("learning rate must be positive");
  if (!(baseline_decay >= 0.0 && baseline_decay < 1.0)) {
    throw std::invalid_argument("baseline decay must be in [0, 1)");
  }
  if (eval_every < 1) throw std::invalid_argument("eval_every must be >= 1");
  if (eval_set_size < 1) throw std::invalid_argument("eval_set_size must be >= 1");
  env.validate();
}

void Metrics::write_csv(std::ostream& os) const {
  os << "iteration,untangle_rate,mean_steps,mean_return,elapsed_s\n";
  for (const MetricsRow& r : rows) {
    os << r.iteration << ',' << r.untangle_rate << ',' << r.mean_steps << ',' << r.mean_return
       << ',' << r.elapsed_s << '\n';
  }
}

namespace {

// Sampled rollout for training; records features/mask/action/reward per step.
EpisodeTrace rollout_sampled(Env& env, const PolicyNet& net, Encoding encoding, Rng& rng) {
  EpisodeTrace trace;
  while (!env.done()) {
    TraceStep step;
    step.features = to_features(env.word(), env.mask(), encoding);
    step.mask = env.mask();
    const ActionDistribution dist = forward(net, step.features, step.mask);
    step.action_id = select_sample(dist, rng);
    const StepOutcome out = env.step(step.action_id);
    step.reward = out.reward;
    trace.steps.push_back(std::move(step));
  }
  trace.solved = env.reason() == DoneReason::solved;
  return trace;
}

struct GreedyRollout {
  bool solved;
  int steps;
  double episode_return;
};

GreedyRollout rollout_greedy(Env& env, const PolicyNet& net, Encoding encoding) {
  double total = 0.0;
  while (!env.done()) {
    const auto features = to_features(env.word(), env.mask(), encoding);
    const ActionDistribution dist = forward(net, features, env.mask());
    total += env.step(select_greedy(dist)).reward;
  }
  return {env.reason() == DoneReason::solved, env.steps(), total};
}

EvalResult evaluate_records(const PolicyNet& net, const ActionTable& table, Encoding encoding,
                            const DatasetRecord* records, std::size_t count,
                            const EnvConfig& env_cfg, bool certify) {
  EvalResult result;
  result.outcomes.reserve(count);
  Env env(table, env_cfg);
  std::size_t solved = 0;
  long solved_steps = 0;
  double return_sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const BraidWord start = records[i].to_word();
    env.reset(start);
    const GreedyRollout r = rollout_greedy(env, net, encoding);
    if (r.solved) {
      if (certify && !(env.word().is_trivial_diagram() && is_trivial(start))) {
        throw std::logic_error("solved episode failed oracle certification (move engine bug)");
      }
      ++solved;
      solved_steps += r.steps;
    }
    return_sum += r.episode_return;
    result.outcomes.push_back({r.solved, r.steps, r.episode_return});
  }
  result.untangle_rate = count ? static_cast<double>(solved) / static_cast<double>(count) : 0.0;
  result.mean_steps = solved ? static_cast<double>(solved_steps) / static_cast<double>(solved) : 0.0;
  result.mean_return = count ? return_sum / static_cast<double>(count) : 0.0;
  return result;
}

} // namespace

EvalResult evaluate(const PolicyNet& net, const ActionTable& table, Encoding encoding,
                    const std::vector<DatasetRecord>& dataset, const EnvConfig& env_cfg) {
  if (dataset.empty()) throw std::invalid_argument("evaluation dataset is empty");
  const auto [n, slots] = dataset_shape(dataset);
  if (n != table.strands() || slots != table.slots()) {
    throw std::invalid_argument("dataset shape does not match the model's action grid");
  }
  const NetDims expect = NetDims::from_grid(n, slots, table.size());
  if (!(expect == net.dims)) throw std::invalid_argument("net dimensions do not match dataset");
  return evaluate_records(net, table, encoding, dataset.data(), dataset.size(), env_cfg,
                          /*certify=*/true);
}

SolveResult greedy_solve(const PolicyNet& net, const ActionTable& table, Encoding encoding,
                         const BraidWord& start, int max_steps) {
  EnvConfig cfg;
  cfg.max_steps = max_steps;
  Env env(table, cfg);
  env.reset(start);
  SolveResult result{false, 0, {}};
  while (!env.done()) {
    const auto features = to_features(env.word(), env.mask(), encoding);
    const int action = select_greedy(forward(net, features, env.mask()));
    env.step(action);
    result.actions.push_back(action);
  }
  result.solved = env.reason() == DoneReason::solved;
  result.steps = env.steps();
  return result;
}

TrainResult train(const TrainConfig& cfg, const std::vector<DatasetRecord>& dataset,
                  std::ostream* log) {
  cfg.validate();
  const auto [n, slots] = dataset_shape(dataset);
  const ActionTable table(n, slots, cfg.insertion_enabled);
  const NetDims dims = NetDims::from_grid(n, slots, table.size());

  // 90/10 split by record index; at least one held-out record.
  const std::size_t train_count = std::max<std::size_t>(1, dataset.size() * 9 / 10);
  const std::size_t held_start = train_count < dataset.size() ? train_count : 0;
  const std::size_t held_count =
      std::min<std::size_t>(dataset.size() - held_start, static_cast<std::size_t>(cfg.eval_set_size));

  Rng rng(cfg.seed);
  PolicyNet net = PolicyNet::init(dims, policy_config_digest(table, cfg.encoding), rng);
  AdamState opt(dims);
  Gradients grads(dims);
  Env env(table, cfg.env);

  Metrics metrics;
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_s = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  auto emit_eval = [&](int iteration) {
    const EvalResult r = evaluate_records(net, table, cfg.encoding, dataset.data() + held_start,
                                          held_count, cfg.env, /*certify=*/false);
    metrics.rows.push_back({iteration, r.untangle_rate, r.mean_steps, r.mean_return, elapsed_s()});
    if (log) {
      *log << "iter " << iteration << "  rate " << r.untangle_rate << "  mean_steps "
           << r.mean_steps << "  mean_return " << r.mean_return << '\n';
    }
  };

  emit_eval(0);

  double baseline = 0.0;
  bool baseline_ready = false;
  for (int it = 1; it <= cfg.iterations; ++it) {
    grads.clear();
    for (int e = 0; e < cfg.episodes_per_iteration; ++e) {
      const DatasetRecord& rec = dataset[rng.index_below(train_count)];
      env.reset(rec.to_word());
      const EpisodeTrace trace = rollout_sampled(env, net, cfg.encoding, rng);
      if (trace.steps.empty()) continue;

      std::vector<double> rewards;
      rewards.reserve(trace.steps.size());
      for (const TraceStep& s : trace.steps) rewards.push_back(s.reward);
      const std::vector<double> returns = discounted_returns(rewards, cfg.env.discount);

      if (!baseline_ready) {
        baseline = returns.front();
        baseline_ready = true;
      }
      accumulate_policy_gradient(net, trace, returns, baseline, grads);
      baseline = cfg.baseline_decay * baseline + (1.0 - cfg.baseline_decay) * returns.front();
    }
    adam_step(net, grads, opt, cfg.lr);
    if (!net.all_finite()) {
      throw std::runtime_error("training diverged (non-finite parameters) at iteration " +
                               std::to_string(it));
    }
    if (it % cfg.eval_every == 0 || it == cfg.iterations) emit_eval(it);
  }

  TrainResult result{std::move(net), std::move(metrics), 0.0};
  result.final_rate = result.metrics.rows.back().untangle_rate;
  return result;
}

std::vector<SweepRow> sweep(const TrainConfig& cfg, SweepAxis axis, const std::vector<int>& values,
                            const std::vector<std::vector<DatasetRecord>>& datasets,
                            std::ostream* log) {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
  std::vector<SweepRow> rows;
  if (axis == SweepAxis::crossings) {
    if (datasets.size() != values.size()) {
      throw std::invalid_argument("crossings sweep needs one dataset per value");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      const TrainResult r = train(cfg, datasets[i], log);
      const MetricsRow& last = r.metrics.rows.back();
      rows.push_back({values[i], last.untangle_rate, last.mean_steps});
    }
    return rows;
  }

  // max_steps axis: one checkpoint, evaluated per budget on the held-out split.
  if (datasets.size() != 1) throw std::invalid_argument("max_steps sweep uses a single dataset");
  const TrainResult r = train(cfg, datasets[0], log);
  const auto [n, slots] = dataset_shape(datasets[0]);
  const ActionTable table(n, slots, cfg.insertion_enabled);
  const std::size_t held_start = std::max<std::size_t>(1, datasets[0].size() * 9 / 10);
  std::vector<DatasetRecord> held(datasets[0].begin() + static_cast<std::ptrdiff_t>(held_start),
                                  datasets[0].end());
  if (held.empty()) held = datasets[0];
  for (int budget : values) {
    EnvConfig env_cfg = cfg.env;
    env_cfg.max_steps = budget;
    const EvalResult e = evaluate(r.net, table, cfg.encoding, held, env_cfg);
    rows.push_back({budget, e.untangle_rate, e.mean_steps});
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "value,untangle_rate,mean_steps\n";
  for (const SweepRow& r : rows) {
    os << r.value << ',' << r.untangle_rate << ',' << r.mean_steps << '\n';
  }
}

} // namespace braidrl
