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
#include <functional>
#include <vector>

#include "monogen/lexicon.hpp"
#include "monogen/sentence.hpp"

namespace monogen {

struct GenerationConfig {
  int max_depth = 5;
  std::uint64_t seed = 0;
  // Premises drawn per sampled depth (at least |Q|^depth so that every ordered
  // quantifier combination can be covered).
  int per_depth_quota = 40000;
  // Depths strictly below this bound are enumerated exhaustively.
  int exhaustive_below_depth = 3;
  const Lexicon* lexicon = &Lexicon::standard();

  void validate() const;
};

// Streams every premise of the given depth in generation order. Exhaustive
// depths visit the full cross product of the lexicon (minus trees repeating a
// content lemma); sampled depths visit one tree per ordered quantifier
// combination followed by uniform draws up to the quota.
void for_each_premise(const GenerationConfig& config, int depth,
                      const std::function<void(const SentenceTree&)>& visit);

std::vector<SentenceTree> generate_premises(const GenerationConfig& config, int depth);

// Number of premises for_each_premise produces at `depth`.
std::uint64_t premise_count(const GenerationConfig& config, int depth);

// Ordered quantifier surface forms of the embedding chain.
std::vector<std::string> quantifier_sequence(const SentenceTree& t);

}  // namespace monogen
