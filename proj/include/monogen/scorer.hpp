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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "monogen/protocol.hpp"
#include "monogen/replacement.hpp"

namespace monogen {

struct PredictionRecord {
  std::string id;
  Label label = Label::kEntailment;

  bool operator==(const PredictionRecord&) const = default;
};

// JSON lines {"id": ..., "label": ...}; other fields are rejected.
std::vector<PredictionRecord> read_predictions(const std::filesystem::path& path);
void write_predictions(const std::filesystem::path& path,
                       const std::vector<PredictionRecord>& predictions);

struct GroupScore {
  double mean = 0.0;    // percent
  double stddev = 0.0;  // percent, population over runs
  std::size_t n = 0;    // pairs per run

  bool operator==(const GroupScore&) const = default;
};

struct ScoreReport {
  Aspect aspect = Aspect::kReplacementSystematicity;
  int step_index = 0;
  int runs = 1;
  std::map<std::string, GroupScore> groups;
};

// Gold pairs by id (dataset pairs plus materialized variants).
using GoldIndex = std::unordered_map<std::string, const InferencePair*>;
GoldIndex index_pairs(const std::vector<const std::vector<InferencePair>*>& sources);

// Ids a prediction file must cover: test ids plus variant ids.
std::vector<std::string> required_ids(const SplitPlan& plan);

// Accuracy per test group, plus "variant/<name>" groups for structure
// variants. Throws JoinError for ids outside the plan or the gold index and
// CoverageError listing required ids without a prediction.
ScoreReport score(const std::vector<PredictionRecord>& predictions, const SplitPlan& plan,
                  const GoldIndex& gold);

// Mean and population standard deviation per group across runs. Throws
// AggregationError when the reports differ in aspect, step or group keys.
ScoreReport aggregate_runs(const std::vector<ScoreReport>& reports);

enum class Strategy : std::uint8_t { kMajority, kRandom, kLexicalOverlap };

std::string_view to_string(Strategy s);
Strategy strategy_from_string(std::string_view s);

// majority: the most frequent training label (ties go to entailment).
// random: a seeded coin per id. lexical_overlap: entailment iff every
// hypothesis word occurs in the premise.
std::vector<PredictionRecord> builtin_predict(Strategy strategy,
                                              const std::vector<const InferencePair*>& train,
                                              const std::vector<const InferencePair*>& test,
                                              std::uint64_t seed);

Label lexical_overlap_label(const InferencePair& pair);

// Row label of the training set, e.g. "S_2" or "D1+D2".
std::string train_set_label(Aspect aspect, int step_index);

// Machine-readable rows: aspect,train_set,group,mean,stddev,n,runs,chance.
std::string render_csv(const std::vector<ScoreReport>& reports);
// Aligned text table, one row per (train set, test group), accuracy with one
// decimal and a below/above-chance note.
std::string render_table(const std::vector<ScoreReport>& reports);

}  // namespace monogen
