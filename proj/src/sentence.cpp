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

#include "monogen/sentence.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "monogen/errors.hpp"

namespace monogen {

std::string_view to_string(ClauseType c) {
  switch (c) {
    case ClauseType::kPeripheral: return "peripheral";
    case ClauseType::kCenterObjGap: return "center_obj_gap";
    case ClauseType::kCenterSubjGap: return "center_subj_gap";
    case ClauseType::kIntransitive: return "intransitive";
  }
  return "?";
}

std::string_view to_string(StructureVariant v) {
  switch (v) {
    case StructureVariant::kBase: return "base";
    case StructureVariant::kAdvPrefix: return "adv_prefix";
    case StructureVariant::kPpPrefix: return "pp_prefix";
    case StructureVariant::kObjectPosition: return "object_position";
  }
  return "?";
}

StructureVariant structure_variant_from_string(std::string_view s) {
  for (auto v : {StructureVariant::kBase, StructureVariant::kAdvPrefix,
                 StructureVariant::kPpPrefix, StructureVariant::kObjectPosition}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown structure variant '" + std::string(s) + "'");
}

std::vector<ClauseType> SentenceTree::clause_types() const {
  std::vector<ClauseType> out;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) out.push_back(chain[k].clause);
  if (variant == StructureVariant::kObjectPosition && object_relative_verb) {
    out.push_back(ClauseType::kIntransitive);
  }
  return out;
}

int SentenceTree::quantifier_count() const {
  return depth() + (variant == StructureVariant::kObjectPosition ? 1 : 0);
}

bool has_verb(const SentenceTree& t) {
  return t.variant != StructureVariant::kObjectPosition || t.object_relative_verb;
}

std::string noun_lemma(const Lexicon& lex, const NounGroup& g) {
  return g.hypernym ? lex.hypernyms.at(g.noun) : lex.nouns.at(g.noun);
}

std::string noun_surface(const Lexicon& lex, const NounGroup& g) {
  std::string lemma = noun_lemma(lex, g);
  return g.plural ? pluralize(lemma) : lemma;
}

namespace {

bool in_range(std::int8_t idx, const std::vector<std::string>& words) {
  return idx == kNoWord || (idx >= 0 && static_cast<std::size_t>(idx) < words.size());
}

bool noun_ok(const Lexicon& lex, const NounGroup& g) {
  const auto& pool = g.hypernym ? lex.hypernyms : lex.nouns;
  if (g.noun >= pool.size()) return false;
  int mods = (g.pp != kNoWord) + (g.relc != kNoWord);
  return mods <= 1 && in_range(g.adjective, lex.adjectives) && in_range(g.pp, lex.pps) &&
         in_range(g.relc, lex.relcs);
}

bool verb_ok(const Lexicon& lex, const VerbGroup& v) {
  if (v.verb >= lex.iv1.size()) return false;
  int mods = (v.adverb != kNoWord) + (v.pp != kNoWord) +
             (v.coordination != Coordination::kNone);
  if (mods > 1) return false;
  if (v.coordination != Coordination::kNone && v.iv2 >= lex.iv2.size()) return false;
  return in_range(v.adverb, lex.advs) && in_range(v.pp, lex.pps);
}

using Role = SurfaceToken::Role;

void append(std::vector<std::string>& out, std::string_view phrase) {
  std::istringstream in{std::string(phrase)};
  std::string w;
  while (in >> w) out.push_back(w);
}

void append(std::vector<SurfaceToken>& out, std::string_view phrase) {
  std::istringstream in{std::string(phrase)};
  std::string w;
  while (in >> w) out.push_back({w, Role::kOther, -1});
}

void emit_noun_group(const Lexicon& lex, const NounGroup& g, Role role, int np,
                     std::vector<SurfaceToken>& out) {
  if (g.adjective != kNoWord) append(out, lex.adjectives[g.adjective]);
  out.push_back({noun_surface(lex, g), role, np});
  if (g.pp != kNoWord) append(out, lex.pps[g.pp]);
  if (g.relc != kNoWord) append(out, lex.relcs[g.relc]);
}

void emit_verb_group(const Lexicon& lex, const VerbGroup& v, std::vector<SurfaceToken>& out) {
  out.push_back({lex.iv1[v.verb], Role::kVerbHead, -1});
  if (v.adverb != kNoWord) append(out, lex.advs[v.adverb]);
  if (v.pp != kNoWord) append(out, lex.pps[v.pp]);
  if (v.coordination == Coordination::kOr) {
    append(out, "or");
    append(out, lex.iv2[v.iv2]);
  } else if (v.coordination == Coordination::kAnd) {
    append(out, "and");
    append(out, lex.iv2[v.iv2]);
  }
}

void emit_np(const SentenceTree& t, std::size_t k, std::vector<SurfaceToken>& out) {
  const Lexicon& lex = *t.lexicon;
  const NounPhrase& np = t.chain[k];
  append(out, lex.quantifiers[np.quantifier].surface_form);
  emit_noun_group(lex, np.noun, Role::kNounHead, static_cast<int>(k), out);
  if (k + 1 < t.chain.size()) {
    switch (np.clause) {
      case ClauseType::kPeripheral:
        append(out, lex.whnps[np.wh]);
        append(out, lex.tv[np.tv]);
        emit_np(t, k + 1, out);
        break;
      case ClauseType::kCenterObjGap:
        append(out, lex.whnps[np.wh]);
        emit_np(t, k + 1, out);
        append(out, lex.tv[np.tv]);
        break;
      case ClauseType::kCenterSubjGap:
        emit_np(t, k + 1, out);
        append(out, lex.tv[np.tv]);
        break;
      case ClauseType::kIntransitive:
        break;
    }
  } else if (t.variant == StructureVariant::kObjectPosition && t.object_relative_verb) {
    append(out, lex.whnps[np.wh]);
    emit_verb_group(lex, t.verb, out);
  }
}

}  // namespace

bool is_well_formed(const SentenceTree& t) {
  if (t.lexicon == nullptr || t.chain.empty()) return false;
  const Lexicon& lex = *t.lexicon;
  for (std::size_t k = 0; k < t.chain.size(); ++k) {
    const auto& np = t.chain[k];
    if (np.quantifier >= lex.quantifiers.size() || !noun_ok(lex, np.noun)) return false;
    if (k + 1 < t.chain.size()) {
      if (np.clause == ClauseType::kIntransitive) return false;
      if (np.tv >= lex.tv.size() || np.wh >= lex.whnps.size()) return false;
    }
  }
  if (has_verb(t) && !verb_ok(lex, t.verb)) return false;
  switch (t.variant) {
    case StructureVariant::kBase:
      return t.prefix == kNoWord;
    case StructureVariant::kAdvPrefix:
      return t.prefix != kNoWord && in_range(t.prefix, lex.advs);
    case StructureVariant::kPpPrefix:
      return t.prefix != kNoWord && in_range(t.prefix, lex.pps);
    case StructureVariant::kObjectPosition:
      return t.prefix == kNoWord && t.chain.size() == 1 &&
             t.host.quantifier < lex.quantifiers.size() && noun_ok(lex, t.host.noun) &&
             t.host.tv < lex.tv.size() && t.chain[0].wh < lex.whnps.size();
  }
  return false;
}

bool has_unique_lemmas(const SentenceTree& t) {
  const Lexicon& lex = *t.lexicon;
  std::set<std::string> seen;
  bool ok = true;
  auto add = [&](const std::string& w) {
    if (!seen.insert(w).second) ok = false;
  };
  auto add_group = [&](const NounGroup& g) {
    add(noun_lemma(lex, g));
    if (g.adjective != kNoWord) add(lex.adjectives[g.adjective]);
    if (g.pp != kNoWord) add(lex.pps[g.pp]);
    if (g.relc != kNoWord) add(lex.relcs[g.relc]);
  };
  for (std::size_t k = 0; k < t.chain.size(); ++k) {
    add_group(t.chain[k].noun);
    if (k + 1 < t.chain.size()) add(lex.tv[t.chain[k].tv]);
  }
  if (has_verb(t)) {
    add(lex.iv1[t.verb.verb]);
    if (t.verb.adverb != kNoWord) add(lex.advs[t.verb.adverb]);
    if (t.verb.pp != kNoWord) add(lex.pps[t.verb.pp]);
    if (t.verb.coordination != Coordination::kNone) add(lex.iv2[t.verb.iv2]);
  }
  if (t.variant == StructureVariant::kAdvPrefix) add(lex.advs[t.prefix]);
  if (t.variant == StructureVariant::kPpPrefix) add(lex.pps[t.prefix]);
  if (t.variant == StructureVariant::kObjectPosition) {
    add_group(t.host.noun);
    add(lex.tv[t.host.tv]);
  }
  return ok;
}

std::vector<SurfaceToken> surface_tokens(const SentenceTree& t) {
  const Lexicon& lex = *t.lexicon;
  std::vector<SurfaceToken> tokens;
  if (t.variant == StructureVariant::kAdvPrefix) {
    append(tokens, lex.advs[t.prefix]);
    append(tokens, ",");
  } else if (t.variant == StructureVariant::kPpPrefix) {
    append(tokens, lex.pps[t.prefix]);
    append(tokens, ",");
  }
  if (t.variant == StructureVariant::kObjectPosition) {
    append(tokens, lex.quantifiers[t.host.quantifier].surface_form);
    emit_noun_group(lex, t.host.noun, Role::kHostNounHead, -1, tokens);
    append(tokens, lex.tv[t.host.tv]);
    emit_np(t, 0, tokens);
  } else {
    emit_np(t, 0, tokens);
    emit_verb_group(lex, t.verb, tokens);
  }
  append(tokens, ".");
  if (!tokens.empty() && !tokens[0].text.empty()) {
    auto& c = tokens[0].text[0];
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return tokens;
}

std::string linearize(const SentenceTree& t) {
  std::string out;
  for (const auto& tok : surface_tokens(t)) {
    if (!out.empty()) out.push_back(' ');
    out += tok.text;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) {
    std::vector<std::string> trailing;
    while (w.size() > 1 && (w.back() == ',' || w.back() == '.')) {
      trailing.insert(trailing.begin(), std::string(1, w.back()));
      w.pop_back();
    }
    out.push_back(w);
    out.insert(out.end(), trailing.begin(), trailing.end());
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::vector<std::string> tokens, const Lexicon& lex, std::string_view text)
      : tok_(std::move(tokens)), lex_(lex), text_(text) {
    if (!tok_.empty()) {
      for (auto& c : tok_[0]) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }

  SentenceTree parse() {
    SentenceTree t;
    t.lexicon = &lex_;
    if (auto adv = match_word(lex_.advs); adv && peek(1) == ",") {
      t.variant = StructureVariant::kAdvPrefix;
      t.prefix = static_cast<std::int8_t>(*adv);
      pos_ += 2;
    } else if (auto pp = match_phrase(lex_.pps)) {
      t.variant = StructureVariant::kPpPrefix;
      t.prefix = static_cast<std::int8_t>(pp->first);
      pos_ += pp->second;
      expect(",");
    }
    // Object frame: "Q N TV NP ." is recognized by a TV right after the
    // first noun group.
    std::size_t save = pos_;
    if (t.variant == StructureVariant::kBase) {
      auto q = match_phrase(quantifier_words());
      if (q) {
        pos_ += q->second;
        NounGroup g = parse_noun_group();
        if (auto tv = match_word(lex_.tv)) {
          ++pos_;
          t.variant = StructureVariant::kObjectPosition;
          t.host.quantifier = static_cast<std::uint8_t>(q->first);
          t.host.noun = g;
          t.host.tv = *tv;
          parse_np(t, /*object=*/true);
          end_of_sentence();
          return t;
        }
      }
      pos_ = save;
    }
    parse_np(t, false);
    t.verb = parse_verb_group();
    end_of_sentence();
    return t;
  }

 private:
  const std::string& peek(std::size_t ahead = 0) const {
    static const std::string kEnd;
    return pos_ + ahead < tok_.size() ? tok_[pos_ + ahead] : kEnd;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at token " +
                     std::to_string(pos_) + " ('" + peek() + "'): " + what);
  }

  void expect(const std::string& s) {
    if (peek() != s) fail("expected '" + s + "'");
    ++pos_;
  }

  // The final period is optional.
  void end_of_sentence() {
    if (peek() == ".") ++pos_;
    if (pos_ != tok_.size()) fail("trailing tokens");
  }

  std::vector<std::string> quantifier_words() const {
    std::vector<std::string> out;
    for (const auto& q : lex_.quantifiers) out.push_back(q.surface_form);
    return out;
  }

  std::optional<std::uint8_t> match_word(const std::vector<std::string>& words) const {
    return lex_.index_of(words, peek());
  }

  // Longest multi-word entry matching at the cursor: (index, token count).
  std::optional<std::pair<std::size_t, std::size_t>> match_phrase(
      const std::vector<std::string>& phrases) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = 0; i < phrases.size(); ++i) {
      std::vector<std::string> words;
      append(words, phrases[i]);
      if (pos_ + words.size() > tok_.size()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < words.size() && ok; ++j) ok = tok_[pos_ + j] == words[j];
      if (ok && (!best || words.size() > best->second)) best = {i, words.size()};
    }
    return best;
  }

  NounGroup parse_noun_group() {
    NounGroup g;
    if (auto adj = match_word(lex_.adjectives)) {
      g.adjective = static_cast<std::int8_t>(*adj);
      ++pos_;
    }
    bool found = false;
    for (bool hyper : {false, true}) {
      const auto& pool = hyper ? lex_.hypernyms : lex_.nouns;
      for (std::size_t i = 0; i < pool.size() && !found; ++i) {
        if (peek() == pool[i] || peek() == pluralize(pool[i])) {
          g.noun = static_cast<std::uint8_t>(i);
          g.hypernym = hyper;
          g.plural = peek() != pool[i];
          found = true;
        }
      }
    }
    if (!found) fail("expected a noun");
    ++pos_;
    if (auto pp = match_phrase(lex_.pps)) {
      g.pp = static_cast<std::int8_t>(pp->first);
      pos_ += pp->second;
    } else if (auto rc = match_phrase(lex_.relcs)) {
      g.relc = static_cast<std::int8_t>(rc->first);
      pos_ += rc->second;
    }
    return g;
  }

  VerbGroup parse_verb_group() {
    VerbGroup v;
    auto verb = match_word(lex_.iv1);
    if (!verb) fail("expected an intransitive verb");
    v.verb = *verb;
    ++pos_;
    if (auto adv = match_word(lex_.advs)) {
      v.adverb = static_cast<std::int8_t>(*adv);
      ++pos_;
    } else if (auto pp = match_phrase(lex_.pps)) {
      v.pp = static_cast<std::int8_t>(pp->first);
      pos_ += pp->second;
    } else if (peek() == "or" || peek() == "and") {
      v.coordination = peek() == "or" ? Coordination::kOr : Coordination::kAnd;
      ++pos_;
      auto iv2 = match_word(lex_.iv2);
      if (!iv2) fail("expected a coordinated verb");
      v.iv2 = *iv2;
      ++pos_;
    }
    return v;
  }

  // Parses one NP (and, recursively, the NPs embedded under it) into t.chain.
  void parse_np(SentenceTree& t, bool object) {
    auto q = match_phrase(quantifier_words());
    if (!q) fail("expected a quantifier");
    pos_ += q->second;
    NounPhrase np;
    np.quantifier = static_cast<std::uint8_t>(q->first);
    np.noun = parse_noun_group();
    const std::size_t self = t.chain.size();
    t.chain.push_back(np);

    auto wh = match_word(lex_.whnps);
    if (wh) {
      if (auto tv = lex_.index_of(lex_.tv, peek(1))) {
        pos_ += 2;
        t.chain[self].clause = ClauseType::kPeripheral;
        t.chain[self].wh = *wh;
        t.chain[self].tv = *tv;
        parse_np(t, object);
        return;
      }
      if (object && lex_.index_of(lex_.iv1, peek(1))) {
        ++pos_;
        t.chain[self].wh = *wh;
        t.object_relative_verb = true;
        t.verb = parse_verb_group();
        return;
      }
      ++pos_;
      t.chain[self].clause = ClauseType::kCenterObjGap;
      t.chain[self].wh = *wh;
      parse_np(t, object);
      auto tv = match_word(lex_.tv);
      if (!tv) fail("expected a transitive verb closing a relative clause");
      t.chain[self].tv = *tv;
      ++pos_;
      return;
    }
    if (match_phrase(quantifier_words())) {
      t.chain[self].clause = ClauseType::kCenterSubjGap;
      parse_np(t, object);
      auto tv = match_word(lex_.tv);
      if (!tv) fail("expected a transitive verb closing a relative clause");
      t.chain[self].tv = *tv;
      ++pos_;
    }
  }

  std::vector<std::string> tok_;
  const Lexicon& lex_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SentenceTree parse_sentence(std::string_view text, const Lexicon& lexicon) {
  Parser p(tokenize(text), lexicon, text);
  SentenceTree t = p.parse();
  if (!is_well_formed(t)) throw ParseError("ill-formed sentence '" + std::string(text) + "'");
  return t;
}

}  // namespace monogen
