// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/dataset.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace braidrl {

std::vector<DatasetRecord> load_jsonl(std::istream& in) {
  std::vector<DatasetRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      DatasetRecord rec;
      rec.strands = j.at("n").get<int>();
      rec.slots = j.at("L").get<int>();
      rec.word = j.at("word").get<std::vector<int>>();
      rec.crossings = j.at("crossings").get<int>();
      rec.to_word(); // validate letters against (n, L)
      records.push_back(std::move(rec));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("dataset line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("dataset line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::vector<DatasetRecord> load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open dataset " + path.string());
  return load_jsonl(in);
}

std::pair<int, int> dataset_shape(const std::vector<DatasetRecord>& records) {
  if (records.empty()) throw std::invalid_argument("dataset is empty");
  const int n = records.front().strands;
  const int slots = records.front().slots;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].strands != n || records[i].slots != slots) {
      throw std::invalid_argument("dataset mixes (n, L) shapes at record " + std::to_string(i));
    }
  }
  return {n, slots};
}

} // namespace braidrl
