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

#include "monogen/replacement.hpp"

#include "monogen/errors.hpp"
#include "monogen/grammar.hpp"
#include "monogen/rng.hpp"

namespace monogen {

const std::array<ReplacementFunction, 7>& replacement_functions() {
  static const std::array<ReplacementFunction, 7> fns = {{
      {ReplacementId::kHyponym, Slot::kNoun},
      {ReplacementId::kAdjective, Slot::kNoun},
      {ReplacementId::kPreposition, Slot::kNoun},
      {ReplacementId::kRelativeClause, Slot::kNoun},
      {ReplacementId::kAdverb, Slot::kVerb},
      {ReplacementId::kDisjunction, Slot::kVerb},
      {ReplacementId::kConjunction, Slot::kVerb},
  }};
  return fns;
}

Slot applies_to(ReplacementId id) {
  return replacement_functions()[static_cast<std::size_t>(id)].applies_to;
}

std::string_view to_string(ReplacementId id) {
  switch (id) {
    case ReplacementId::kHyponym: return "r1_hyponym";
    case ReplacementId::kAdjective: return "r2_adjective";
    case ReplacementId::kPreposition: return "r3_preposition";
    case ReplacementId::kRelativeClause: return "r4_relative_clause";
    case ReplacementId::kAdverb: return "r5_adverb";
    case ReplacementId::kDisjunction: return "r6_disjunction";
    case ReplacementId::kConjunction: return "r7_conjunction";
  }
  return "?";
}

ReplacementId replacement_from_string(std::string_view s) {
  for (auto id : kAllReplacements) {
    if (to_string(id) == s) return id;
  }
  throw ParseError("unknown replacement function '" + std::string(s) + "'");
}

std::string_view to_string(Label l) {
  return l == Label::kEntailment ? "entailment" : "non_entailment";
}

Label label_from_string(std::string_view s) {
  if (s == "entailment") return Label::kEntailment;
  if (s == "non_entailment") return Label::kNonEntailment;
  throw ParseError("unknown label '" + std::string(s) + "'");
}

Label infer_label(Direction polarity, RewriteDirection direction) {
  const bool preserved = (polarity == Direction::kUpward) ==
                         (direction == RewriteDirection::kToGeneral);
  return preserved ? Label::kEntailment : Label::kNonEntailment;
}

namespace {

NounGroup& noun_at(SentenceTree& t, Position p) {
  return p.np == Position::kHostNp ? t.host.noun : t.chain.at(static_cast<std::size_t>(p.np)).noun;
}

template <typename Edit>
void try_option(const SentenceTree& tree, std::vector<SentenceTree>& out, Edit edit) {
  SentenceTree t = tree;
  edit(t);
  if (has_unique_lemmas(t)) out.push_back(std::move(t));
}

std::vector<SentenceTree> noun_options(const SentenceTree& tree, Position p, ReplacementId f,
                                       RewriteDirection dir) {
  const Lexicon& lex = *tree.lexicon;
  std::vector<SentenceTree> out;
  SentenceTree probe = tree;
  const NounGroup g = noun_at(probe, p);
  const bool general = dir == RewriteDirection::kToGeneral;
  const bool has_post = g.pp != kNoWord || g.relc != kNoWord;
  switch (f) {
    case ReplacementId::kHyponym:
      if (general && !g.hypernym) {
        auto it = lex.hyponymy_map.find(lex.nouns[g.noun]);
        if (it == lex.hyponymy_map.end()) break;
        for (auto h : it->second) {
          try_option(tree, out, [&](SentenceTree& t) {
            noun_at(t, p).hypernym = true;
            noun_at(t, p).noun = h;
          });
        }
      } else if (!general && g.hypernym) {
        for (std::size_t n = 0; n < lex.nouns.size(); ++n) {
          auto it = lex.hyponymy_map.find(lex.nouns[n]);
          if (it == lex.hyponymy_map.end()) continue;
          bool covers = false;
          for (auto h : it->second) covers = covers || h == g.noun;
          if (!covers) continue;
          try_option(tree, out, [&](SentenceTree& t) {
            noun_at(t, p).hypernym = false;
            noun_at(t, p).noun = static_cast<std::uint8_t>(n);
          });
        }
      }
      break;
    case ReplacementId::kAdjective:
      if (general && g.adjective != kNoWord) {
        try_option(tree, out, [&](SentenceTree& t) { noun_at(t, p).adjective = kNoWord; });
      } else if (!general && g.adjective == kNoWord) {
        for (std::size_t a = 0; a < lex.adjectives.size(); ++a) {
          try_option(tree, out, [&](SentenceTree& t) {
            noun_at(t, p).adjective = static_cast<std::int8_t>(a);
          });
        }
      }
      break;
    case ReplacementId::kPreposition:
      if (general && g.pp != kNoWord) {
        try_option(tree, out, [&](SentenceTree& t) { noun_at(t, p).pp = kNoWord; });
      } else if (!general && !has_post) {
        for (std::size_t a = 0; a < lex.pps.size(); ++a) {
          try_option(tree, out, [&](SentenceTree& t) {
            noun_at(t, p).pp = static_cast<std::int8_t>(a);
          });
        }
      }
      break;
    case ReplacementId::kRelativeClause:
      if (general && g.relc != kNoWord) {
        try_option(tree, out, [&](SentenceTree& t) { noun_at(t, p).relc = kNoWord; });
      } else if (!general && !has_post) {
        for (std::size_t a = 0; a < lex.relcs.size(); ++a) {
          try_option(tree, out, [&](SentenceTree& t) {
            noun_at(t, p).relc = static_cast<std::int8_t>(a);
          });
        }
      }
      break;
    default:
      break;
  }
  return out;
}

std::vector<SentenceTree> verb_options(const SentenceTree& tree, ReplacementId f,
                                       RewriteDirection dir) {
  const Lexicon& lex = *tree.lexicon;
  std::vector<SentenceTree> out;
  if (!has_verb(tree)) return out;
  const VerbGroup& v = tree.verb;
  const bool general = dir == RewriteDirection::kToGeneral;
  const bool bare = v.adverb == kNoWord && v.pp == kNoWord &&
                    v.coordination == Coordination::kNone;
  auto add_iv2 = [&](Coordination c) {
    for (std::size_t a = 0; a < lex.iv2.size(); ++a) {
      try_option(tree, out, [&](SentenceTree& t) {
        t.verb.coordination = c;
        t.verb.iv2 = static_cast<std::uint8_t>(a);
      });
    }
  };
  auto drop_iv2 = [&] {
    try_option(tree, out, [&](SentenceTree& t) {
      t.verb.coordination = Coordination::kNone;
      t.verb.iv2 = 0;
    });
  };
  switch (f) {
    case ReplacementId::kAdverb:
      if (general && v.adverb != kNoWord) {
        try_option(tree, out, [&](SentenceTree& t) { t.verb.adverb = kNoWord; });
      } else if (!general && bare) {
        for (std::size_t a = 0; a < lex.advs.size(); ++a) {
          try_option(tree, out, [&](SentenceTree& t) {
            t.verb.adverb = static_cast<std::int8_t>(a);
          });
        }
      }
      break;
    case ReplacementId::kDisjunction:
      if (general && bare) {
        add_iv2(Coordination::kOr);
      } else if (!general && v.coordination == Coordination::kOr) {
        drop_iv2();
      }
      break;
    case ReplacementId::kConjunction:
      if (general && v.coordination == Coordination::kAnd) {
        drop_iv2();
      } else if (!general && bare) {
        add_iv2(Coordination::kAnd);
      }
      break;
    default:
      break;
  }
  return out;
}

RewriteDirection opposite(RewriteDirection d) {
  return d == RewriteDirection::kToGeneral ? RewriteDirection::kToSpecific
                                           : RewriteDirection::kToGeneral;
}

}  // namespace

std::vector<SentenceTree> rewrite_options(const SentenceTree& tree, Position position,
                                          ReplacementId f, RewriteDirection direction) {
  if (applies_to(f) != position.slot) return {};
  if (position.slot == Slot::kNoun) return noun_options(tree, position, f, direction);
  return verb_options(tree, f, direction);
}

bool is_compatible(const TargetPosition& target, ReplacementId f, int depth) {
  if (applies_to(f) != target.position.slot) return false;
  if (depth >= 2) {
    return target.argument == Argument::kFirst && applies_to(f) == Slot::kNoun;
  }
  return true;
}

InferencePair make_pair(const SentenceTree& premise, const SentenceTree& hypothesis,
                        ReplacementId f, const TargetPosition& target,
                        RewriteDirection direction, std::uint64_t run_seed) {
  InferencePair p;
  p.premise = linearize(premise);
  p.hypothesis = linearize(hypothesis);
  p.label = infer_label(target.polarity, direction);
  p.depth = premise.depth();
  p.quantifiers = quantifier_sequence(premise);
  p.replacement = f;
  p.target_argument = target.argument;
  p.target_polarity = target.polarity;
  p.structure_variant = premise.variant;
  p.run_seed = run_seed;
  return p;
}

std::vector<InferencePair> synthesize_pairs(const PolarityMarkedTree& marked,
                                            const std::vector<ReplacementId>& functions,
                                            Label want_label, const SynthesisOptions& options) {
  std::vector<InferencePair> out;
  const SentenceTree& tree = marked.tree;
  Rng rng(hash_combine(options.seed, stable_hash(linearize(tree))));
  for (const auto& target : marked.target_positions) {
    for (auto f : functions) {
      if (!is_compatible(target, f, tree.depth())) continue;
      RewriteDirection dir = RewriteDirection::kToGeneral;
      if (infer_label(target.polarity, dir) != want_label) dir = opposite(dir);
      auto options_list = rewrite_options(tree, target.position, f, dir);
      if (options_list.empty()) continue;
      if (options.all_fillers) {
        for (const auto& h : options_list) {
          out.push_back(make_pair(tree, h, f, target, dir, options.seed));
        }
      } else {
        const auto& h = options_list[rng.below(options_list.size())];
        out.push_back(make_pair(tree, h, f, target, dir, options.seed));
      }
    }
  }
  return out;
}

std::vector<ContrastUnit> contrast_units(const PolarityMarkedTree& marked,
                                         const TargetPosition& target, ReplacementId f) {
  std::vector<ContrastUnit> out;
  const SentenceTree& tree = marked.tree;
  if (!is_compatible(target, f, tree.depth())) return out;
  for (const auto& g : rewrite_options(tree, target.position, f, RewriteDirection::kToGeneral)) {
    out.push_back({tree, g, f, target});
  }
  for (const auto& s : rewrite_options(tree, target.position, f, RewriteDirection::kToSpecific)) {
    out.push_back({s, tree, f, target});
  }
  return out;
}

std::array<InferencePair, 2> unit_pairs(const ContrastUnit& unit, std::uint64_t run_seed) {
  // Polarity is identical on both sides: the rewrite does not touch any
  // quantifier.
  InferencePair down = make_pair(unit.specific, unit.general, unit.replacement, unit.target,
                                 RewriteDirection::kToGeneral, run_seed);
  InferencePair up = make_pair(unit.general, unit.specific, unit.replacement, unit.target,
                               RewriteDirection::kToSpecific, run_seed);
  if (down.label == Label::kEntailment) return {down, up};
  return {up, down};
}

}  // namespace monogen
