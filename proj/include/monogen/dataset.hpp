// Copyright 2026 The monogen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "monogen/grammar.hpp"
#include "monogen/replacement.hpp"

namespace monogen {

inline constexpr std::string_view kDatasetVersion = "monogen-dataset/1";

struct DatasetConfig {
  GenerationConfig generation;
  std::size_t train_cap = 300000;
  std::size_t test_cap = 20000;
  std::size_t total_cap = 320000;

  void validate() const;
  // Share of each (depth, direction) stratum routed to the test side before
  // capping: test_cap / (train_cap + test_cap).
  double test_fraction() const;
};

using StratumKey = std::tuple<int, Label, Direction>;

struct SideCounts {
  std::size_t pairs = 0;
  std::map<StratumKey, std::size_t> strata;

  bool operator==(const SideCounts&) const = default;
};

struct DatasetManifest {
  std::string version = std::string(kDatasetVersion);
  std::string schema;
  std::uint64_t seed = 0;
  int max_depth = 0;
  std::size_t total_cap = 0;
  std::size_t train_cap = 0;
  std::size_t test_cap = 0;
  SideCounts train;
  SideCounts test;
  // Distinct ordered quantifier sequences over train and test, per depth.
  std::map<int, std::size_t> quantifier_combinations;
  std::map<int, std::size_t> missing_combinations;

  bool operator==(const DatasetManifest&) const = default;
};

std::string manifest_to_json(const DatasetManifest& m);
DatasetManifest manifest_from_json(std::string_view text);

struct Dataset {
  std::vector<InferencePair> train;
  std::vector<InferencePair> test;
  DatasetManifest manifest;
};

// Entailment/non-entailment minimal pairs for every depth up to max_depth.
// Depth 1 takes every target, function and filler of every premise; deeper
// premises contribute one seeded unit each, alternating target polarity.
std::vector<InferencePair> build_inventory(const GenerationConfig& config);

// Seeded sample of n inventory pairs, drawn round-robin over the
// (depth, replacement) strata so that every function and depth is present.
std::vector<InferencePair> sample_pairs(const GenerationConfig& config, std::size_t n);

// Same draw over an existing pool; pairs keep their ids.
std::vector<InferencePair> stratified_sample(const std::vector<InferencePair>& pool,
                                             std::size_t n, std::uint64_t seed);

// Stratified split and downsampling. Pairs are regrouped into minimal pairs;
// premises linked through shared sentences go to the same side; each side is
// capped with an exact label balance and an exact up/down balance per depth
// when availability allows, keeping one pair per quantifier combination.
// Throws BalanceError when a (depth, direction) stratum lacks a label.
Dataset balance_and_cap(const std::vector<InferencePair>& pairs, const DatasetConfig& config);

Dataset generate_dataset(const DatasetConfig& config);

// train.jsonl, test.jsonl (".jsonl.gz" when compressed) and manifest.json
// under `dir`.
void write_dataset(const std::filesystem::path& dir, const Dataset& dataset,
                   bool compress = false);
Dataset read_dataset(const std::filesystem::path& dir);

// Counts per (depth, label, direction) of a pair sequence.
SideCounts count_strata(const std::vector<InferencePair>& pairs);

}  // namespace monogen
