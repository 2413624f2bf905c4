// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/scramble.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "braidrl/artin.hpp"
#include "braidrl/moves.hpp"

namespace braidrl {

void GenParams::validate() const {
  if (strands < 2) throw std::invalid_argument("need at least 2 strands");
  if (slots < 1) throw std::invalid_argument("need at least 1 slot");
  if (crossings < 0 || crossings % 2 != 0) {
    throw std::invalid_argument("crossing target must be even and non-negative");
  }
  if (crossings > slots) {
    throw std::invalid_argument("crossing target " + std::to_string(crossings) +
                                " does not fit in " + std::to_string(slots) + " slots");
  }
  if (mix_steps < 0) throw std::invalid_argument("mix_steps must be non-negative");
  if (retry_budget < 1) throw std::invalid_argument("retry budget must be positive");
}

namespace {

// One scramble attempt; nullopt when an insertion finds no (0,0) site.
std::optional<BraidWord> try_scramble(const GenParams& p, const ActionTable& table, Rng& rng) {
  BraidWord word = BraidWord::zeros(p.strands, p.slots);
  if (p.crossings == 0) return word;

  const int pairs = p.crossings / 2;
  const int mix_per_insertion = (p.mix_steps + pairs - 1) / pairs;
  const int signed_gens = 2 * (p.strands - 1);

  std::vector<int> sites;
  std::vector<int> mixing;
  for (int k = 0; k < pairs; ++k) {
    sites.clear();
    const auto& letters = word.letters();
    for (int q = 0; q + 1 < p.slots; ++q) {
      if (letters[q] == 0 && letters[q + 1] == 0) sites.push_back(q);
    }
    if (sites.empty()) return std::nullopt;

    const int pos = sites[rng.index_below(sites.size())];
    const int pick = static_cast<int>(rng.index_below(static_cast<std::size_t>(signed_gens)));
    const int gen = pick < p.strands - 1 ? pick + 1 : -(pick - (p.strands - 1) + 1);
    word = apply_move(word, {MoveKind::insert, gen, pos});

    for (int s = 0; s < mix_per_insertion; ++s) {
      mixing.clear();
      for (int id = table.slots(); id < table.size(); ++id) { // skip the cancel row
        if (applicable(word, table.action(id))) mixing.push_back(id);
      }
      if (mixing.empty()) break;
      word = apply_move(word, table.action(mixing[rng.index_below(mixing.size())]));
    }
  }
  return word;
}

} // namespace

BraidWord scramble_word(const GenParams& p, Rng& rng) {
  p.validate();
  // Mixing draws from commute/braid rows only; insertions are placed directly.
  const ActionTable table(p.strands, p.slots, /*insertion_enabled=*/false);
  for (int attempt = 0; attempt < p.retry_budget; ++attempt) {
    if (auto word = try_scramble(p, table, rng)) return std::move(*word);
  }
  throw std::runtime_error("scramble failed after " + std::to_string(p.retry_budget) +
                           " attempts (crossing target too dense for the word length)");
}

namespace {

DatasetRecord make_record(std::size_t index, const GenParams& p) {
  Rng rng(Rng::stream_seed(p.seed, index));
  BraidWord word = scramble_word(p, rng);
  if (word.crossing_count() != p.crossings) {
    throw std::runtime_error("record " + std::to_string(index) + ": crossing count " +
                             std::to_string(word.crossing_count()) + " != target");
  }
  if (!is_trivial(word)) {
    throw std::runtime_error("record " + std::to_string(index) +
                             ": generated word failed the triviality oracle");
  }
  return {p.strands, p.slots, word.letters(), p.crossings};
}

} // namespace

std::vector<DatasetRecord> generate_records(std::size_t count, const GenParams& p) {
  p.validate();
  std::vector<DatasetRecord> records;
  records.reserve(count);
  for (std::size_t k = 0; k < count; ++k) records.push_back(make_record(k, p));
  return records;
}

DatasetSummary generate_dataset(std::size_t count, const GenParams& p, std::ostream& sink) {
  if (count < 1) throw std::invalid_argument("dataset needs at least one record");
  std::size_t written = 0;
  for (const DatasetRecord& rec : generate_records(count, p)) {
    nlohmann::ordered_json j;
    j["n"] = rec.strands;
    j["L"] = rec.slots;
    j["word"] = rec.word;
    j["crossings"] = rec.crossings;
    sink << j.dump() << '\n';
    if (!sink) throw std::runtime_error("dataset write failed at record " + std::to_string(written));
    ++written;
  }
  return {written, p, 1.0};
}

} // namespace braidrl
