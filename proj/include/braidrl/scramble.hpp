// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "braidrl/braid.hpp"
#include "braidrl/dataset.hpp"
#include "braidrl/rng.hpp"

namespace braidrl {

/// Parameters for scramble-generated trivial braids. The crossing target
/// must be even (crossings enter in cancelling pairs) and fit in the word.
struct GenParams {
  int strands = 4;
  int slots = 10;
  int crossings = 10;
  int mix_steps = 20;
  std::uint64_t seed = 0;
  int retry_budget = 1000;

  void validate() const;
};

/// Builds a trivial word with exactly `crossings` crossings by inserting
/// cancelling pairs into the empty word and shuffling with commute/braid
/// moves (never cancel, so the count is monotone). After each insertion it
/// runs ceil(mix_steps / (crossings/2)) mixing moves. Restarts with fresh
/// randomness when no insertion site is free; throws std::runtime_error
/// once the retry budget is spent.
BraidWord scramble_word(const GenParams& params, Rng& rng);

struct DatasetSummary {
  std::size_t count = 0;
  GenParams params;
  double oracle_pass_rate = 0.0; // fraction of records the Artin oracle certifies
};

/// Writes `count` JSONL records to `sink`. Record k draws its randomness
/// from (seed, k), so output bytes do not depend on generation order. Every
/// record is verified with the Artin oracle; the summary's pass rate is
/// always 1.0 (a failure would be a bug and throws).
DatasetSummary generate_dataset(std::size_t count, const GenParams& params, std::ostream& sink);

/// In-memory variant of generate_dataset (same record-level randomness).
std::vector<DatasetRecord> generate_records(std::size_t count, const GenParams& params);

} // namespace braidrl
