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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monogen/lexicon.hpp"
#include "monogen/replacement.hpp"

namespace monogen {

inline constexpr std::string_view kPlanVersion = "monogen-plan/1";

enum class Aspect : std::uint8_t {
  kReplacementSystematicity,
  kEmbeddingQuantifiers,
  kProductivity,
  kLocalism,
};

std::string_view to_string(Aspect a);
Aspect aspect_from_string(std::string_view s);

// What the test side of a plan holds out from training.
struct HeldOut {
  // Quantifiers that occur in test pairs.
  std::set<std::string> quantifiers;
  // Aspect I: the anchor replacement, absent from every test pair.
  std::optional<ReplacementId> replacement;
  std::set<int> depths;

  bool operator==(const HeldOut&) const = default;
};

struct SplitPlan {
  Aspect aspect = Aspect::kReplacementSystematicity;
  int run_index = 0;
  int step_index = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
  std::map<StructureVariant, std::vector<std::string>> variant_test_ids;
  HeldOut held_out;
  // Named subsets of test_ids ("all", "D3", "D3/downward", ...).
  std::map<std::string, std::vector<std::string>> test_groups;
  // Aspects I and II: the (upward, downward) quantifier sequence p of the run.
  std::vector<std::pair<std::string, std::string>> sequence;

  // e.g. "productivity_run0_step1"
  std::string name() const;

  bool operator==(const SplitPlan&) const = default;
};

struct AspectConfig {
  std::string anchor_quantifier = "some";
  ReplacementId anchor_replacement = ReplacementId::kHyponym;
  int num_runs = 5;
  std::uint64_t seed = 0;
  int s = 5;
  const Lexicon* lexicon = &Lexicon::standard();

  void validate() const;
};

// Seeded disjoint matching of upward with downward quantifiers, excluding
// `exclude`; one run's p sequence.
std::vector<std::pair<std::string, std::string>> quantifier_sequence_for_run(
    const AspectConfig& config, int run_index, const std::set<std::string>& exclude, int length);

// Aspect I over depth-1 pairs. Step 0 trains on S_1 = D1^{q,R} + D1^{Q,r};
// step i adds D1^{p(1..i),R}. Tests hold D1 pairs whose quantifier is outside
// {q} and p(1..i) and whose replacement is not r.
std::vector<SplitPlan> build_replacement_systematicity(const AspectConfig& config,
                                                       const std::vector<InferencePair>& pool);

// Aspect II: S_0 = D1, S_i = S_{i-1} + D2^{p(i),R}; T_i = D2^{complement of Q_i}.
std::vector<SplitPlan> build_embedding_quantifiers(const AspectConfig& config,
                                                   const std::vector<InferencePair>& pool);

// Aspect III: train depths 1..i+1 (train side), test depths i+2..s (test side).
std::vector<SplitPlan> build_productivity(const AspectConfig& config,
                                          const std::vector<InferencePair>& train_side,
                                          const std::vector<InferencePair>& test_side);

// Aspect IV: train depth d (train side), test depths 1..d (test side).
std::vector<SplitPlan> build_localism(const AspectConfig& config,
                                      const std::vector<InferencePair>& train_side,
                                      const std::vector<InferencePair>& test_side);

// Rewrites a depth-1 base pair with an adverb prefix, a PP prefix or the
// "Some <noun> <tv> ..." object frame. The label is recomputed from the new
// polarity. Throws UnsupportedVariantError for other pairs.
InferencePair make_structure_variant(const InferencePair& pair, StructureVariant variant,
                                     const Lexicon& lexicon = Lexicon::standard());

// Variant id suffixes: "_adv", "_pp", "_obj".
std::string variant_id(const std::string& base_id, StructureVariant variant);

// Variants of every pair referenced by the plans' variant_test_ids.
std::vector<InferencePair> materialize_variants(const std::vector<SplitPlan>& plans,
                                                const std::vector<InferencePair>& pool,
                                                const Lexicon& lexicon = Lexicon::standard());

std::string plan_to_json(const SplitPlan& plan);
SplitPlan plan_from_json(std::string_view text);
void write_plan(const std::filesystem::path& path, const SplitPlan& plan);
SplitPlan read_plan(const std::filesystem::path& path);

}  // namespace monogen
