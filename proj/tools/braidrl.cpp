// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

// braidrl: generate trivial-braid datasets, train and evaluate the
// untangling policy, solve and check individual braids, and benchmark the
// network against the group-theoretic oracle.
//
// Exit codes: 0 success/solved, 1 negative verdict (unsolved/nontrivial),
// 2 usage or contract errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidrl/artin.hpp"
#include "braidrl/bench.hpp"
#include "braidrl/dataset.hpp"
#include "braidrl/scramble.hpp"
#include "braidrl/trainer.hpp"

namespace {

using braidrl::BraidWord;
using braidrl::Encoding;

constexpr int kExitSolved = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct GlobalFlags {
  bool quiet = false;
  bool json = false;
};

std::vector<int> parse_inline_word(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("inline word must be a JSON integer array");
  return j.get<std::vector<int>>();
}

// Words shorter than the model's slot count are padded with empty slots.
BraidWord fit_word(int strands, int slots, std::vector<int> letters) {
  if (static_cast<int>(letters.size()) > slots) {
    throw std::invalid_argument("word has " + std::to_string(letters.size()) +
                                " letters but the model expects at most " +
                                std::to_string(slots));
  }
  letters.resize(static_cast<std::size_t>(slots), 0);
  return BraidWord(strands, slots, std::move(letters));
}

struct LoadedModel {
  braidrl::PolicyNet net;
  braidrl::ActionTable table;
  Encoding encoding;
};

LoadedModel load_model(const std::string& path) {
  braidrl::Checkpoint ckpt = braidrl::load_checkpoint(path);
  braidrl::ActionTable table(ckpt.strands, ckpt.slots, ckpt.insertion_enabled);
  const std::string expect = braidrl::policy_config_digest(table, ckpt.encoding);
  if (expect != ckpt.net.config_digest) {
    throw braidrl::CheckpointError("checkpoint action-grid layout \"" + ckpt.net.config_digest +
                                   "\" does not match this build (\"" + expect + "\")");
  }
  const braidrl::NetDims dims =
      braidrl::NetDims::from_grid(ckpt.strands, ckpt.slots, table.size());
  if (!(dims == ckpt.net.dims)) {
    throw braidrl::CheckpointError("checkpoint dimensions do not match its action grid");
  }
  return {std::move(ckpt.net), std::move(table), ckpt.encoding};
}

int run_gen(const GlobalFlags& flags, int n, int len, int crossings, int mix, int count,
            std::uint64_t seed, const std::string& out) {
  braidrl::GenParams params;
  params.strands = n;
  params.slots = len;
  params.crossings = crossings;
  params.mix_steps = mix;
  params.seed = seed;
  params.validate();

  std::ofstream sink(out, std::ios::binary | std::ios::trunc);
  if (!sink) throw std::runtime_error("cannot open " + out + " for writing");
  const braidrl::DatasetSummary summary =
      braidrl::generate_dataset(static_cast<std::size_t>(count), params, sink);

  if (flags.json) {
    nlohmann::ordered_json j;
    j["count"] = summary.count;
    j["n"] = n;
    j["L"] = len;
    j["crossings"] = crossings;
    j["mix"] = mix;
    j["seed"] = seed;
    j["oracle_pass_rate"] = summary.oracle_pass_rate;
    j["out"] = out;
    std::cout << j.dump() << '\n';
  } else if (!flags.quiet) {
    std::cout << "wrote " << summary.count << " trivial braids (n=" << n << ", L=" << len
              << ", crossings=" << crossings << ", mix=" << mix << ", seed=" << seed
              << ") to " << out << "; oracle pass rate " << summary.oracle_pass_rate << '\n';
  }
  return kExitSolved;
}

int run_train(const GlobalFlags& flags, const std::string& data, braidrl::TrainConfig cfg,
              const std::string& out, const std::string& metrics_path) {
  const auto dataset = braidrl::load_jsonl(data);
  std::ostream* log = flags.quiet || flags.json ? nullptr : &std::cout;
  const braidrl::TrainResult result = braidrl::train(cfg, dataset, log);
  braidrl::save_checkpoint(result.net, out);
  if (!metrics_path.empty()) {
    std::ofstream ms(metrics_path, std::ios::trunc);
    if (!ms) throw std::runtime_error("cannot open " + metrics_path + " for writing");
    result.metrics.write_csv(ms);
  }
  if (flags.json) {
    nlohmann::ordered_json j;
    j["final_untangle_rate"] = result.final_rate;
    j["iterations"] = cfg.iterations;
    j["model"] = out;
    std::cout << j.dump() << '\n';
  } else if (!flags.quiet) {
    std::cout << "final held-out untangle rate " << result.final_rate << "; model saved to "
              << out << '\n';
  }
  return kExitSolved;
}

int run_eval(const GlobalFlags& flags, const std::string& model, const std::string& data,
             int max_steps) {
  const LoadedModel m = load_model(model);
  const auto dataset = braidrl::load_jsonl(data);
  braidrl::EnvConfig env_cfg;
  env_cfg.max_steps = max_steps;
  const braidrl::EvalResult r = braidrl::evaluate(m.net, m.table, m.encoding, dataset, env_cfg);
  if (flags.json) {
    nlohmann::ordered_json j;
    j["untangle_rate"] = r.untangle_rate;
    j["mean_steps"] = r.mean_steps;
    j["mean_return"] = r.mean_return;
    j["braids"] = dataset.size();
    j["max_steps"] = max_steps;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "untangle rate " << r.untangle_rate << " (" << dataset.size() << " braids, "
              << max_steps << " step budget); mean steps to solve " << r.mean_steps << '\n';
  }
  return kExitSolved;
}

int solve_one(const GlobalFlags& flags, const LoadedModel& m, const BraidWord& word,
              int max_steps, bool trace) {
  braidrl::EnvConfig env_cfg;
  env_cfg.max_steps = max_steps;
  braidrl::Env env(m.table, env_cfg);
  env.reset(word);
  int step_no = 0;
  while (!env.done()) {
    const auto features = braidrl::to_features(env.word(), env.mask(), m.encoding);
    const int action = braidrl::select_greedy(braidrl::forward(m.net, features, env.mask()));
    env.step(action);
    ++step_no;
    if (trace) {
      const std::string move = braidrl::describe(m.table.action(action));
      if (flags.json) {
        nlohmann::ordered_json j;
        j["step"] = step_no;
        j["move"] = move;
        j["word"] = env.word().letters();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << move << "  -> [";
        for (int i = 0; i < env.word().slots(); ++i) {
          std::cout << (i ? "," : "") << env.word().letter(i);
        }
        std::cout << "]\n";
      }
    }
  }
  const bool solved = env.reason() == braidrl::DoneReason::solved;
  if (flags.json) {
    nlohmann::ordered_json j;
    j["solved"] = solved;
    j["steps"] = env.steps();
    j["reason"] = braidrl::done_reason_name(env.reason());
    std::cout << j.dump() << '\n';
  } else if (!flags.quiet) {
    std::cout << (solved ? "solved" : "unsolved") << " in " << env.steps() << " steps ("
              << braidrl::done_reason_name(env.reason()) << ")\n";
  }
  return solved ? kExitSolved : kExitNegative;
}

int run_solve(const GlobalFlags& flags, const std::string& model, const std::string& inline_word,
              const std::string& file, int max_steps, bool trace) {
  const LoadedModel m = load_model(model);
  if (inline_word.empty() == file.empty()) {
    throw std::invalid_argument("pass exactly one of an inline word or --file");
  }
  if (!inline_word.empty()) {
    const BraidWord word =
        fit_word(m.table.strands(), m.table.slots(), parse_inline_word(inline_word));
    return solve_one(flags, m, word, max_steps, trace);
  }
  int exit_code = kExitSolved;
  for (const braidrl::DatasetRecord& rec : braidrl::load_jsonl(file)) {
    const BraidWord word = fit_word(m.table.strands(), m.table.slots(), rec.word);
    if (solve_one(flags, m, word, max_steps, trace) != kExitSolved) exit_code = kExitNegative;
  }
  return exit_code;
}

int check_one(const GlobalFlags& flags, const BraidWord& word, std::size_t index) {
  const braidrl::TimedCheck result = braidrl::timed_check(word);
  const double us = std::chrono::duration<double, std::micro>(result.elapsed).count();
  if (flags.json) {
    nlohmann::ordered_json j;
    j["record"] = index;
    j["trivial"] = result.trivial;
    j["us"] = us;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (result.trivial ? "trivial" : "nontrivial") << ' ' << us << "us\n";
  }
  return result.trivial ? kExitSolved : kExitNegative;
}

int run_check(const GlobalFlags& flags, const std::string& inline_word, const std::string& file,
              int n) {
  if (inline_word.empty() == file.empty()) {
    throw std::invalid_argument("pass exactly one of an inline word or --file");
  }
  if (!inline_word.empty()) {
    if (n < 2) throw std::invalid_argument("--n is required with an inline word");
    const std::vector<int> letters = parse_inline_word(inline_word);
    const BraidWord word(n, static_cast<int>(letters.size()), letters);
    return check_one(flags, word, 0);
  }
  int exit_code = kExitSolved;
  std::size_t index = 0;
  for (const braidrl::DatasetRecord& rec : braidrl::load_jsonl(file)) {
    if (check_one(flags, rec.to_word(), index++) != kExitSolved) exit_code = kExitNegative;
  }
  return exit_code;
}

int run_bench(const GlobalFlags& flags, const std::string& model,
              const std::vector<int>& crossings, int samples, int mix, std::uint64_t seed,
              int max_steps, const std::string& out) {
  const LoadedModel m = load_model(model);
  braidrl::BenchParams params;
  params.crossings = crossings;
  params.samples = samples;
  params.mix_steps = mix;
  params.seed = seed;
  params.max_steps = max_steps;
  const auto rows = braidrl::bench_compare(m.net, m.table, m.encoding, params);
  if (!out.empty()) {
    std::ofstream os(out, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + out + " for writing");
    braidrl::write_bench_csv(os, rows);
  }
  if (flags.json) {
    for (const braidrl::BenchRow& r : rows) {
      nlohmann::ordered_json j;
      j["crossings"] = r.crossings;
      j["samples"] = r.samples;
      j["nn_mean_us"] = r.nn_mean_us;
      j["nn_median_us"] = r.nn_median_us;
      j["oracle_mean_us"] = r.oracle_mean_us;
      j["oracle_median_us"] = r.oracle_median_us;
      j["nn_solve_rate"] = r.nn_solve_rate;
      std::cout << j.dump() << '\n';
    }
  } else if (!flags.quiet) {
    braidrl::write_bench_csv(std::cout, rows);
  }
  return kExitSolved;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidrl: train and evaluate a Reidemeister-move untangling agent"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--quiet", flags.quiet, "suppress progress output");
  app.add_flag("--json", flags.json, "machine-readable single-line JSON output");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a trivial-braid JSONL dataset");
  int gen_n = 4, gen_len = 10, gen_crossings = 10, gen_mix = -1, gen_count = 1000;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "strand count")->check(CLI::Range(2, 1024));
  gen->add_option("--len", gen_len, "word length (slots)")->required();
  gen->add_option("--crossings", gen_crossings, "crossing count (even)")->required();
  gen->add_option("--mix", gen_mix, "mixing moves per word (default 2x crossings)");
  gen->add_option("--count", gen_count, "records to generate")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "dataset seed");
  gen->add_option("--out", gen_out, "output JSONL path")->required();

  // train
  auto* train = app.add_subcommand("train", "train the untangling policy");
  std::string train_data, train_out, train_metrics;
  braidrl::TrainConfig cfg;
  bool raw_encoding = false;
  train->add_option("--data", train_data, "training dataset (JSONL)")->required();
  train->add_option("--iters", cfg.iterations, "training iterations");
  train->add_option("--episodes", cfg.episodes_per_iteration, "episodes per iteration");
  train->add_option("--max-steps", cfg.env.max_steps, "step budget per episode");
  train->add_option("--gamma", cfg.env.discount, "discount factor");
  train->add_option("--lr", cfg.lr, "Adam learning rate");
  train->add_option("--step-reward", cfg.env.step_reward, "reward per move (negative)");
  train->add_option("--success-reward", cfg.env.success_reward, "terminal reward");
  train->add_option("--baseline-decay", cfg.baseline_decay, "return-baseline decay");
  train->add_option("--eval-every", cfg.eval_every, "iterations between metric rows");
  train->add_option("--eval-set-size", cfg.eval_set_size, "held-out braids per eval");
  train->add_option("--seed", cfg.seed, "training seed");
  train->add_flag("--raw-encoding", raw_encoding, "feed raw letters instead of scaling to [-1,1]");
  train->add_flag("--enable-insertion", cfg.insertion_enabled,
                  "include crossing-increasing insert moves in the action grid");
  train->add_option("--out", train_out, "checkpoint output path")->required();
  train->add_option("--metrics", train_metrics, "metrics CSV output path");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a checkpoint on a dataset");
  std::string eval_model, eval_data;
  int eval_max_steps = 50;
  eval->add_option("--model", eval_model, "checkpoint path")->required();
  eval->add_option("--data", eval_data, "dataset (JSONL)")->required();
  eval->add_option("--max-steps", eval_max_steps, "step budget per braid");

  // solve
  auto* solve = app.add_subcommand("solve", "greedily untangle a braid with a trained model");
  std::string solve_model, solve_word, solve_file;
  int solve_max_steps = 50;
  bool solve_trace = false;
  solve->add_option("--model", solve_model, "checkpoint path")->required();
  solve->add_option("word", solve_word, "inline JSON integer array");
  solve->add_option("--file", solve_file, "JSONL file of braids");
  solve->add_option("--max-steps", solve_max_steps, "step budget");
  solve->add_flag("--trace", solve_trace, "print each applied move and resulting word");

  // check
  auto* check = app.add_subcommand("check", "exact triviality check via the Artin action");
  std::string check_word, check_file;
  int check_n = 0;
  check->add_option("word", check_word, "inline JSON integer array");
  check->add_option("--file", check_file, "JSONL file of braids");
  check->add_option("--n", check_n, "strand count for an inline word");

  // bench
  auto* bench = app.add_subcommand("bench", "time the network against the oracle");
  std::string bench_model, bench_out;
  std::vector<int> bench_crossings{8, 12, 16, 20};
  int bench_samples = 100, bench_mix = 20, bench_max_steps = 50;
  std::uint64_t bench_seed = 0;
  bench->add_option("--model", bench_model, "checkpoint path")->required();
  bench->add_option("--crossings", bench_crossings, "crossing counts (comma separated)")
      ->delimiter(',');
  bench->add_option("--samples", bench_samples, "braids per crossing count")
      ->check(CLI::PositiveNumber);
  bench->add_option("--mix", bench_mix, "scramble mixing moves");
  bench->add_option("--seed", bench_seed, "generation seed");
  bench->add_option("--max-steps", bench_max_steps, "step budget per braid");
  bench->add_option("--out", bench_out, "benchmark CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*gen) {
      if (gen_mix < 0) gen_mix = 2 * gen_crossings;
      return run_gen(flags, gen_n, gen_len, gen_crossings, gen_mix, gen_count, gen_seed, gen_out);
    }
    if (*train) {
      cfg.encoding = raw_encoding ? Encoding::raw : Encoding::scaled;
      return run_train(flags, train_data, cfg, train_out, train_metrics);
    }
    if (*eval) return run_eval(flags, eval_model, eval_data, eval_max_steps);
    if (*solve) return run_solve(flags, solve_model, solve_word, solve_file, solve_max_steps,
                                 solve_trace);
    if (*check) return run_check(flags, check_word, check_file, check_n);
    if (*bench) {
      return run_bench(flags, bench_model, bench_crossings, bench_samples, bench_mix, bench_seed,
                       bench_max_steps, bench_out);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
