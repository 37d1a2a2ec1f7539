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
#include <map>
#include <string>
#include <vector>

#include "monogen/errors.hpp"
#include "monogen/lambda.hpp"
#include "monogen/sentence.hpp"

namespace monogen {

// First-order formula. Variables are identified by the nesting level of their
// binder, so alpha-equivalent formulas compare equal.
struct Formula {
  enum class Kind : std::uint8_t { kAtom, kEq, kNot, kAnd, kOr, kImplies, kExists, kForall };
  Kind kind = Kind::kAtom;
  std::string predicate;  // kAtom
  std::vector<int> args;  // kAtom, kEq: variable levels
  int binder = -1;        // kExists, kForall: level bound here
  std::vector<Formula> children;

  bool operator==(const Formula&) const = default;

  static Formula atom(std::string predicate, std::vector<int> args);
  static Formula equal(int a, int b);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);
  static Formula implication(Formula a, Formula b);
  static Formula exists(int level, Formula body);
  static Formula forall(int level, Formula body);
};

// Predicate symbol -> arity. Throws TranslationError on conflicting arities.
using Signature = std::map<std::string, int>;
void collect_signature(const Formula& f, Signature& sig);
Signature signature(const Formula& f);

bool is_closed(const Formula& f);

// Converts a beta-normal, closed, first-order lambda term.
Formula to_formula(const Term& t);

// Unreduced composition of the lexical entries of `tree`.
Term sentence_term(const SentenceTree& tree);

Formula translate(const SentenceTree& tree);

// ∀x(hyponym(x) → hypernym(x)) for every noun/hypernym pair of the lexicon
// whose two members both occur in the given trees.
std::vector<Formula> hyponymy_axioms(const std::vector<const SentenceTree*>& trees);

// Variable names by level: x, y, z, w, v, u, then x6, x7, ...
std::string variable_name(int level);

// ∃x(dog(x) ∧ ran(x))
std::string to_string(const Formula& f);

}  // namespace monogen
