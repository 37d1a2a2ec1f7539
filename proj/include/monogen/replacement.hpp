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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monogen/polarity.hpp"
#include "monogen/sentence.hpp"

namespace monogen {

enum class ReplacementId : std::uint8_t {
  kHyponym,         // dogs ⊑ animals
  kAdjective,       // small dogs ⊑ dogs
  kPreposition,     // dogs in the park ⊑ dogs
  kRelativeClause,  // dogs which ate dinner ⊑ dogs
  kAdverb,          // ran quickly ⊑ ran
  kDisjunction,     // ran ⊑ ran or walked
  kConjunction,     // ran and barked ⊑ ran
};

inline constexpr std::array<ReplacementId, 7> kAllReplacements = {
    ReplacementId::kHyponym,        ReplacementId::kAdjective,
    ReplacementId::kPreposition,    ReplacementId::kRelativeClause,
    ReplacementId::kAdverb,         ReplacementId::kDisjunction,
    ReplacementId::kConjunction,
};

struct ReplacementFunction {
  ReplacementId id;
  Slot applies_to;
};

const std::array<ReplacementFunction, 7>& replacement_functions();
Slot applies_to(ReplacementId id);

// "r1_hyponym" ... "r7_conjunction"
std::string_view to_string(ReplacementId id);
ReplacementId replacement_from_string(std::string_view s);

enum class RewriteDirection : std::uint8_t { kToGeneral, kToSpecific };

enum class Label : std::uint8_t { kEntailment, kNonEntailment };

std::string_view to_string(Label l);
Label label_from_string(std::string_view s);

// Monotonicity rule: generalizing in an upward context or specializing in a
// downward context preserves truth.
Label infer_label(Direction polarity, RewriteDirection direction);

struct InferencePair {
  std::string id;
  std::string premise;
  std::string hypothesis;
  Label label = Label::kEntailment;
  int depth = 1;
  std::vector<std::string> quantifiers;
  ReplacementId replacement = ReplacementId::kHyponym;
  Argument target_argument = Argument::kFirst;
  Direction target_polarity = Direction::kUpward;
  StructureVariant structure_variant = StructureVariant::kBase;
  std::uint64_t run_seed = 0;

  bool operator==(const InferencePair&) const = default;
};

// Every valid result of rewriting the constituent at `position` with `f` in
// the given direction, one per filler (hypernym, adjective, PP, ...). Results
// that would repeat a content lemma are dropped.
std::vector<SentenceTree> rewrite_options(const SentenceTree& tree, Position position,
                                          ReplacementId f, RewriteDirection direction);

// Whether `f` may target `target` in a tree of the given depth: embedded
// sentences (depth >= 2) only rewrite first arguments with r1-r4.
bool is_compatible(const TargetPosition& target, ReplacementId f, int depth);

struct SynthesisOptions {
  std::uint64_t seed = 0;
  // Emit one pair per filler instead of one seeded filler per target.
  bool all_fillers = false;
};

// Rewrites the marked premise at every compatible (position, function) in the
// direction that produces `want_label`.
std::vector<InferencePair> synthesize_pairs(const PolarityMarkedTree& marked,
                                            const std::vector<ReplacementId>& functions,
                                            Label want_label,
                                            const SynthesisOptions& options = {});

// The specific/general sentence pair obtained by rewriting a grammar premise
// at one target; the premise itself is one of the two sides.
struct ContrastUnit {
  SentenceTree specific;
  SentenceTree general;
  ReplacementId replacement;
  TargetPosition target;
};

// All units for one target and function, one per filler.
std::vector<ContrastUnit> contrast_units(const PolarityMarkedTree& marked,
                                         const TargetPosition& target, ReplacementId f);

// The entailment and non-entailment pair of a unit, in that order.
std::array<InferencePair, 2> unit_pairs(const ContrastUnit& unit, std::uint64_t run_seed);

// Builds the pair premise => hypothesis with metadata taken from `target`.
InferencePair make_pair(const SentenceTree& premise, const SentenceTree& hypothesis,
                        ReplacementId f, const TargetPosition& target,
                        RewriteDirection direction, std::uint64_t run_seed);

}  // namespace monogen
