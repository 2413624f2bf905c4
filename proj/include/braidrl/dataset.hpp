// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "braidrl/braid.hpp"

namespace braidrl {

/// One JSONL dataset line: {"n": 4, "L": 10, "word": [..], "crossings": 10}
struct DatasetRecord {
  int strands;
  int slots;
  std::vector<int> word;
  int crossings;

  BraidWord to_word() const { return BraidWord(strands, slots, word); }
};

std::vector<DatasetRecord> load_jsonl(std::istream& in);
std::vector<DatasetRecord> load_jsonl(const std::filesystem::path& path);

/// All records must share one (n, L); returns that pair.
/// Throws std::invalid_argument on an empty or mixed dataset.
std::pair<int, int> dataset_shape(const std::vector<DatasetRecord>& records);

} // namespace braidrl
