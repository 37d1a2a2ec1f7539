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

#include "monogen/grammar.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "monogen/errors.hpp"
#include "monogen/rng.hpp"

namespace monogen {
namespace {

constexpr int kClauseTypes = 3;

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw ConfigError("premise space overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

// Falling factorial n * (n-1) * ... * (n-k+1).
std::uint64_t falling(std::uint64_t n, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= (n - static_cast<std::uint64_t>(i));
  return r;
}

struct Digits {
  std::vector<std::uint8_t> quantifiers;
  std::vector<std::uint8_t> nouns;
  std::vector<std::uint8_t> clauses;
  std::vector<std::uint8_t> tvs;
  std::uint8_t iv = 0;
};

bool distinct(const std::vector<std::uint8_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  return true;
}

// Number agreement and wh-words are seeded per tree so that the tree is a pure
// function of (seed, depth, tree key).
SentenceTree build_tree(const Lexicon& lex, const Digits& d, std::uint64_t coin_seed) {
  Rng coins(coin_seed);
  SentenceTree t;
  t.lexicon = &lex;
  const std::size_t depth = d.quantifiers.size();
  t.chain.resize(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    NounPhrase& np = t.chain[k];
    np.quantifier = d.quantifiers[k];
    np.noun.noun = d.nouns[k];
    switch (lex.quantifiers[np.quantifier].number_agreement) {
      case NumberAgreement::kSingular: np.noun.plural = false; break;
      case NumberAgreement::kPlural: np.noun.plural = true; break;
      case NumberAgreement::kBoth: np.noun.plural = coins.coin(); break;
    }
    if (k + 1 < depth) {
      np.clause = static_cast<ClauseType>(d.clauses[k]);
      np.tv = d.tvs[k];
      np.wh = np.clause == ClauseType::kCenterSubjGap
                  ? 0
                  : static_cast<std::uint8_t>(coins.below(lex.whnps.size()));
    }
  }
  t.verb.verb = d.iv;
  return t;
}

void enumerate(const GenerationConfig& config, int depth,
               const std::function<void(const SentenceTree&)>& visit) {
  const Lexicon& lex = *config.lexicon;
  // Odometer digits, most significant first: quantifiers, nouns, clause
  // types, transitive verbs, main verb.
  std::vector<std::uint64_t> radix;
  for (int k = 0; k < depth; ++k) radix.push_back(lex.quantifiers.size());
  for (int k = 0; k < depth; ++k) radix.push_back(lex.nouns.size());
  for (int k = 0; k + 1 < depth; ++k) radix.push_back(kClauseTypes);
  for (int k = 0; k + 1 < depth; ++k) radix.push_back(lex.tv.size());
  radix.push_back(lex.iv1.size());

  std::vector<std::uint64_t> digit(radix.size(), 0);
  const std::uint64_t base_seed = hash_combine(config.seed, static_cast<std::uint64_t>(depth));
  Digits d;
  for (std::uint64_t index = 0;; ++index) {
    std::size_t p = 0;
    d.quantifiers.assign(digit.begin(), digit.begin() + depth);
    p += depth;
    d.nouns.assign(digit.begin() + p, digit.begin() + p + depth);
    p += depth;
    d.clauses.assign(digit.begin() + p, digit.begin() + p + depth - 1);
    p += depth - 1;
    d.tvs.assign(digit.begin() + p, digit.begin() + p + depth - 1);
    p += depth - 1;
    d.iv = static_cast<std::uint8_t>(digit[p]);
    if (distinct(d.nouns) && distinct(d.tvs)) {
      visit(build_tree(lex, d, hash_combine(base_seed, index)));
    }
    // Advance the odometer from the least significant digit.
    std::size_t i = radix.size();
    while (i > 0) {
      --i;
      if (++digit[i] < radix[i]) break;
      digit[i] = 0;
      if (i == 0) return;
    }
  }
}

void draw_distinct(Rng& rng, std::size_t n, int k, std::vector<std::uint8_t>& out) {
  // Reject-and-resample until no lemma repeats.
  do {
    out.clear();
    for (int i = 0; i < k; ++i) out.push_back(static_cast<std::uint8_t>(rng.below(n)));
  } while (!distinct(out));
}

void sample(const GenerationConfig& config, int depth,
            const std::function<void(const SentenceTree&)>& visit) {
  const Lexicon& lex = *config.lexicon;
  const std::uint64_t combos = ipow(lex.quantifiers.size(), depth);
  const std::uint64_t total = premise_count(config, depth);
  const std::uint64_t clause_patterns = ipow(kClauseTypes, depth - 1);
  const std::uint64_t base_seed =
      hash_combine(hash_combine(config.seed, static_cast<std::uint64_t>(depth)), 0x5a);
  Rng rng(base_seed);
  Digits d;
  for (std::uint64_t j = 0; j < total; ++j) {
    d.quantifiers.resize(depth);
    if (j < combos) {
      std::uint64_t c = j;
      for (int k = depth - 1; k >= 0; --k) {
        d.quantifiers[k] = static_cast<std::uint8_t>(c % lex.quantifiers.size());
        c /= lex.quantifiers.size();
      }
    } else {
      for (int k = 0; k < depth; ++k) {
        d.quantifiers[k] = static_cast<std::uint8_t>(rng.below(lex.quantifiers.size()));
      }
    }
    draw_distinct(rng, lex.nouns.size(), depth, d.nouns);
    draw_distinct(rng, lex.tv.size(), depth - 1, d.tvs);
    // Clause-type patterns are stratified: tree j takes pattern j mod 3^(d-1).
    d.clauses.resize(depth - 1);
    std::uint64_t pattern = j % clause_patterns;
    for (int k = 0; k + 1 < depth; ++k) {
      d.clauses[k] = static_cast<std::uint8_t>(pattern % kClauseTypes);
      pattern /= kClauseTypes;
    }
    d.iv = static_cast<std::uint8_t>(rng.below(lex.iv1.size()));
    visit(build_tree(lex, d, hash_combine(base_seed, j + 1)));
  }
}

}  // namespace

void GenerationConfig::validate() const {
  if (lexicon == nullptr) throw ConfigError("generation config has no lexicon");
  if (max_depth < 1) throw ConfigError("max_depth must be at least 1");
  if (per_depth_quota <= 0) throw ConfigError("per_depth_quota must be positive");
  if (exhaustive_below_depth < 1) throw ConfigError("exhaustive_below_depth must be >= 1");
  if (static_cast<std::size_t>(max_depth) > lexicon->nouns.size() ||
      static_cast<std::size_t>(max_depth) > lexicon->tv.size() + 1) {
    throw ConfigError("max_depth " + std::to_string(max_depth) +
                      " exceeds the distinct nouns/verbs available");
  }
  if (lexicon->whnps.empty()) throw ConfigError("lexicon has no wh-words");
}

std::uint64_t premise_count(const GenerationConfig& config, int depth) {
  const Lexicon& lex = *config.lexicon;
  if (depth < config.exhaustive_below_depth) {
    return ipow(lex.quantifiers.size(), depth) * falling(lex.nouns.size(), depth) *
           ipow(kClauseTypes, depth - 1) * falling(lex.tv.size(), depth - 1) *
           lex.iv1.size();
  }
  return std::max<std::uint64_t>(static_cast<std::uint64_t>(config.per_depth_quota),
                                 ipow(lex.quantifiers.size(), depth));
}

void for_each_premise(const GenerationConfig& config, int depth,
                      const std::function<void(const SentenceTree&)>& visit) {
  config.validate();
  if (depth < 1 || depth > config.max_depth) {
    throw ConfigError("depth " + std::to_string(depth) + " outside [1, " +
                      std::to_string(config.max_depth) + "]");
  }
  if (depth < config.exhaustive_below_depth) {
    enumerate(config, depth, visit);
  } else {
    sample(config, depth, visit);
  }
}

std::vector<SentenceTree> generate_premises(const GenerationConfig& config, int depth) {
  std::vector<SentenceTree> out;
  for_each_premise(config, depth, [&](const SentenceTree& t) { out.push_back(t); });
  return out;
}

std::vector<std::string> quantifier_sequence(const SentenceTree& t) {
  std::vector<std::string> out;
  if (t.variant == StructureVariant::kObjectPosition) {
    out.push_back(t.lexicon->quantifiers[t.host.quantifier].surface_form);
  }
  for (const auto& np : t.chain) out.push_back(t.lexicon->quantifiers[np.quantifier].surface_form);
  return out;
}

}  // namespace monogen
