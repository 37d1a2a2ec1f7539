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
#include <string>
#include <string_view>
#include <vector>

namespace monogen {

enum class Direction : std::uint8_t { kUpward, kDownward };

enum class NumberAgreement : std::uint8_t { kSingular, kPlural, kBoth };

enum class CountingSemantics : std::uint8_t {
  kExistential,
  kNo,
  kAtLeast3,
  kAtMost3,
  kMoreThan3,
  kLessThan3,
  kFew,
  kAFew,
};

inline Direction flip(Direction d) {
  return d == Direction::kUpward ? Direction::kDownward : Direction::kUpward;
}

// Sign product of two monotonicity directions (upward = +1).
inline Direction compose(Direction a, Direction b) {
  return a == b ? Direction::kUpward : Direction::kDownward;
}

std::string_view to_string(Direction d);
std::string_view to_string(CountingSemantics s);
Direction direction_from_string(std::string_view s);
CountingSemantics counting_semantics_from_string(std::string_view s);

struct QuantifierSpec {
  std::string surface_form;  // lowercase, may span several words
  Direction direction = Direction::kUpward;
  NumberAgreement number_agreement = NumberAgreement::kPlural;
  CountingSemantics counting_semantics = CountingSemantics::kExistential;

  bool operator==(const QuantifierSpec&) const = default;
};

// Closed vocabulary of the premise grammar plus the material used by the
// replacement functions. Words are stored as lemmas (singular nouns, past
// tense verbs); multi-word entries keep their spaces.
struct Lexicon {
  std::vector<QuantifierSpec> quantifiers;
  std::vector<std::string> nouns;
  std::vector<std::string> iv1;
  std::vector<std::string> iv2;
  std::vector<std::string> tv;
  std::vector<std::string> hypernyms;
  std::vector<std::string> adjectives;
  std::vector<std::string> pps;
  std::vector<std::string> relcs;
  std::vector<std::string> advs;
  std::vector<std::string> whnps;
  // noun lemma -> indices into `hypernyms`
  std::map<std::string, std::vector<std::uint8_t>> hyponymy_map;

  // The compiled-in vocabulary.
  static const Lexicon& standard();

  // Reads the plain-text grammar file format (see data/lexicon.txt).
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::string_view text);

  // Throws ConfigError when a structural invariant is violated.
  void validate() const;

  std::optional<std::uint8_t> quantifier_index(std::string_view surface) const;
  std::optional<std::uint8_t> index_of(const std::vector<std::string>& words,
                                       std::string_view word) const;

  bool operator==(const Lexicon&) const = default;
};

// English plural of a lexicon noun ("wolf" -> "wolves", "fox" -> "foxes").
std::string pluralize(std::string_view noun);

// Lowercased word with spaces replaced by underscores; used for predicate
// symbols and identifiers.
std::string symbolize(std::string_view phrase);

}  // namespace monogen
