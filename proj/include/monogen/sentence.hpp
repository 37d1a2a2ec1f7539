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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monogen/lexicon.hpp"

namespace monogen {

// Embedded-clause productions:
//   kPeripheral     SBar -> WhNP TV NP   ("dogs that chased some cats")
//   kCenterObjGap   SBar -> WhNP NP TV   ("dogs which some cats chased")
//   kCenterSubjGap  SBar -> NP TV        ("dogs some cats chased")
//   kIntransitive   SBar -> WhNP IV1 ... only produced by the object-position
//                   structure variant, never by the premise grammar.
enum class ClauseType : std::uint8_t {
  kPeripheral,
  kCenterObjGap,
  kCenterSubjGap,
  kIntransitive,
};

enum class StructureVariant : std::uint8_t {
  kBase,
  kAdvPrefix,
  kPpPrefix,
  kObjectPosition,
};

enum class Coordination : std::uint8_t { kNone, kOr, kAnd };

std::string_view to_string(ClauseType c);
std::string_view to_string(StructureVariant v);
StructureVariant structure_variant_from_string(std::string_view s);

inline constexpr std::int8_t kNoWord = -1;

// Noun plus at most the modifiers the replacement functions introduce.
struct NounGroup {
  std::uint8_t noun = 0;      // index into nouns, or hypernyms when `hypernym`
  bool hypernym = false;
  bool plural = true;
  std::int8_t adjective = kNoWord;
  std::int8_t pp = kNoWord;
  std::int8_t relc = kNoWord;

  bool operator==(const NounGroup&) const = default;
};

struct VerbGroup {
  std::uint8_t verb = 0;  // index into iv1
  std::int8_t adverb = kNoWord;
  std::int8_t pp = kNoWord;
  Coordination coordination = Coordination::kNone;
  std::uint8_t iv2 = 0;  // meaningful only with coordination

  bool operator==(const VerbGroup&) const = default;
};

// One quantified NP of the embedding chain. When it is not the last element,
// `clause` and `tv` describe the clause that embeds the next NP.
struct NounPhrase {
  std::uint8_t quantifier = 0;
  NounGroup noun;
  ClauseType clause = ClauseType::kPeripheral;
  std::uint8_t wh = 0;
  std::uint8_t tv = 0;

  bool operator==(const NounPhrase&) const = default;
};

// Subject and verb of the object-position frame "Some tiger touched NP".
struct ObjectHost {
  std::uint8_t quantifier = 0;
  NounGroup noun;
  std::uint8_t tv = 0;

  bool operator==(const ObjectHost&) const = default;
};

// A sentence of the premise grammar. chain[0] is the matrix subject (or the
// object NP in the object-position variant); chain[k + 1] sits inside the
// relative clause attached to chain[k]. Lemmas are indices into `lexicon`,
// which must outlive the tree.
struct SentenceTree {
  const Lexicon* lexicon = nullptr;
  std::vector<NounPhrase> chain;
  VerbGroup verb;
  StructureVariant variant = StructureVariant::kBase;
  std::int8_t prefix = kNoWord;  // adverb or PP index for the prefix variants
  ObjectHost host;               // kObjectPosition only
  // kObjectPosition only: the object NP carries "WhNP verb" as a relative.
  bool object_relative_verb = false;

  int depth() const { return static_cast<int>(chain.size()); }
  std::vector<ClauseType> clause_types() const;
  // Number of quantifier occurrences in the surface string.
  int quantifier_count() const;

  bool operator==(const SentenceTree& o) const {
    return chain == o.chain && verb == o.verb && variant == o.variant &&
           prefix == o.prefix && host == o.host &&
           object_relative_verb == o.object_relative_verb;
  }
};

// True if the tree has a main or relative verb (false for object-position
// trees whose target is a noun).
bool has_verb(const SentenceTree& t);

// Structural validity: indices in range, chain non-empty, clause types legal.
bool is_well_formed(const SentenceTree& t);

// Content lemmas (nouns, verbs, modifiers) appear at most once.
bool has_unique_lemmas(const SentenceTree& t);

// A surface token tagged with the constituent it heads, for annotated output.
struct SurfaceToken {
  enum class Role : std::uint8_t { kOther, kNounHead, kVerbHead, kHostNounHead };
  std::string text;
  Role role = Role::kOther;
  int np = -1;  // chain index for kNounHead
};

std::vector<SurfaceToken> surface_tokens(const SentenceTree& t);

// Space-separated surface string ending in " ." with the first letter
// capitalized, e.g. "Some dogs ran ."
std::string linearize(const SentenceTree& t);

// Inverse of linearize over the trees this library builds. Tokens are split on
// whitespace; "," and "." may be attached to the preceding word, and the
// final "." may be left out.
SentenceTree parse_sentence(std::string_view text, const Lexicon& lexicon);

std::vector<std::string> tokenize(std::string_view text);

std::string noun_surface(const Lexicon& lex, const NounGroup& g);
std::string noun_lemma(const Lexicon& lex, const NounGroup& g);

}  // namespace monogen
