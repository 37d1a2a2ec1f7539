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

#include <algorithm>
#include <set>

#include "monogen/formula.hpp"

namespace monogen {
namespace {

// Builds lexical lambda terms with binder names unique within one sentence.
class Semantics {
 public:
  explicit Semantics(const Lexicon& lex) : lex_(lex) {}

  std::string fresh(const char* stem) { return stem + std::to_string(counter_++); }

  // λx.p(x)
  Term predicate(const std::string& p) {
    auto x = fresh("x");
    return abs(x, atom(p, {var(x)}));
  }

  // λP.λx.(m(x) ∧ P(x))
  Term intersective(const std::string& m) {
    auto p = fresh("P");
    auto x = fresh("x");
    return abs(p, abs(x, conj({atom(m, {var(x)}), app(var(p), var(x))})));
  }

  // λP.λQ.∃x1..xk(distinct ∧ ⋀ (P(xi) ∧ Q(xi)))
  Term at_least(int k, Term p, Term q) {
    std::vector<std::string> xs;
    for (int i = 0; i < k; ++i) xs.push_back(fresh("x"));
    std::vector<Term> parts;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) parts.push_back(neg(eq(var(xs[i]), var(xs[j]))));
    }
    for (int i = 0; i < k; ++i) {
      parts.push_back(app(p, var(xs[i])));
      parts.push_back(app(q, var(xs[i])));
    }
    Term body = conj(std::move(parts));
    for (int i = k - 1; i >= 0; --i) body = exists(xs[i], body);
    return body;
  }

  Term quantifier(const QuantifierSpec& spec) {
    auto p = fresh("P");
    auto q = fresh("Q");
    auto x = fresh("x");
    auto exists_pq = [&](std::vector<Term> extra) {
      extra.push_back(app(var(p), var(x)));
      extra.push_back(app(var(q), var(x)));
      return exists(x, conj(std::move(extra)));
    };
    Term body;
    switch (spec.counting_semantics) {
      case CountingSemantics::kExistential: body = exists_pq({}); break;
      case CountingSemantics::kNo: body = neg(exists_pq({})); break;
      case CountingSemantics::kAtLeast3: body = at_least(3, var(p), var(q)); break;
      case CountingSemantics::kMoreThan3: body = at_least(4, var(p), var(q)); break;
      case CountingSemantics::kAtMost3: body = neg(at_least(4, var(p), var(q))); break;
      case CountingSemantics::kLessThan3: body = neg(at_least(3, var(p), var(q))); break;
      case CountingSemantics::kFew:
        body = neg(exists_pq({atom(symbolize(spec.surface_form), {var(x)})}));
        break;
      case CountingSemantics::kAFew:
        body = exists_pq({atom(symbolize(spec.surface_form), {var(x)})});
        break;
    }
    return abs(p, abs(q, body));
  }

  Term noun_group(const NounGroup& g) {
    Term n = predicate(symbolize(noun_lemma(lex_, g)));
    if (g.adjective != kNoWord) n = app(intersective(lex_.adjectives[g.adjective]), n);
    if (g.pp != kNoWord) n = app(intersective(symbolize(lex_.pps[g.pp])), n);
    if (g.relc != kNoWord) n = app(intersective(relc_predicate(lex_.relcs[g.relc])), n);
    return n;
  }

  Term verb_group(const VerbGroup& v, std::int8_t prefix_adv, std::int8_t prefix_pp) {
    auto x = fresh("x");
    std::vector<Term> parts;
    Term core = atom(lex_.iv1[v.verb], {var(x)});
    if (v.coordination == Coordination::kOr) {
      core = disj({core, atom(lex_.iv2[v.iv2], {var(x)})});
    } else if (v.coordination == Coordination::kAnd) {
      core = conj({core, atom(lex_.iv2[v.iv2], {var(x)})});
    }
    parts.push_back(core);
    for (auto adv : {v.adverb, prefix_adv}) {
      if (adv != kNoWord) parts.push_back(atom(lex_.advs[adv], {var(x)}));
    }
    for (auto pp : {v.pp, prefix_pp}) {
      if (pp != kNoWord) parts.push_back(atom(symbolize(lex_.pps[pp]), {var(x)}));
    }
    return abs(x, conj(std::move(parts)));
  }

  // λG.λx.G(λy.tv(x,y)) for subject gaps, λG.λx.G(λy.tv(y,x)) for object gaps.
  Term relative_tv(const std::string& tv, bool subject_gap) {
    auto g = fresh("G");
    auto x = fresh("x");
    auto y = fresh("y");
    Term a = subject_gap ? atom(tv, {var(x), var(y)}) : atom(tv, {var(y), var(x)});
    return abs(g, abs(x, app(var(g), abs(y, a))));
  }

  // λP.λR.λx.(P(x) ∧ R(x))
  Term restrict() {
    auto p = fresh("P");
    auto r = fresh("R");
    auto x = fresh("x");
    return abs(p, abs(r, abs(x, conj({app(var(p), var(x)), app(var(r), var(x))}))));
  }

  // Generalized quantifier for chain NP k and everything it embeds.
  Term noun_phrase(const SentenceTree& t, std::size_t k, const Term* extra_restrictor) {
    const NounPhrase& np = t.chain[k];
    Term restrictor = noun_group(np.noun);
    if (k + 1 < t.chain.size()) {
      Term inner = noun_phrase(t, k + 1, nullptr);
      const bool subject_gap = np.clause == ClauseType::kPeripheral;
      Term clause = app(relative_tv(lex_.tv[np.tv], subject_gap), inner);
      restrictor = app(restrict(), restrictor, clause);
    }
    if (extra_restrictor != nullptr) restrictor = app(restrict(), restrictor, *extra_restrictor);
    return app(quantifier(lex_.quantifiers[np.quantifier]), restrictor);
  }

  Term sentence(const SentenceTree& t) {
    const std::int8_t prefix_adv = t.variant == StructureVariant::kAdvPrefix ? t.prefix : kNoWord;
    const std::int8_t prefix_pp = t.variant == StructureVariant::kPpPrefix ? t.prefix : kNoWord;
    if (t.variant == StructureVariant::kObjectPosition) {
      Term vp = verb_group(t.verb, kNoWord, kNoWord);
      Term object = noun_phrase(t, 0, t.object_relative_verb ? &vp : nullptr);
      Term host_vp = app(relative_tv(lex_.tv[t.host.tv], true), object);
      Term host = app(quantifier(lex_.quantifiers[t.host.quantifier]), noun_group(t.host.noun));
      return app(host, host_vp);
    }
    return app(noun_phrase(t, 0, nullptr), verb_group(t.verb, prefix_adv, prefix_pp));
  }

 private:
  static std::string relc_predicate(const std::string& relc) {
    // "which ate dinner" -> ate_dinner
    auto sp = relc.find(' ');
    return symbolize(sp == std::string::npos ? relc : relc.substr(sp + 1));
  }

  const Lexicon& lex_;
  int counter_ = 0;
};

}  // namespace

Term sentence_term(const SentenceTree& tree) {
  if (tree.lexicon == nullptr || tree.chain.empty()) {
    throw TranslationError("cannot translate an empty tree");
  }
  return Semantics(*tree.lexicon).sentence(tree);
}

Formula translate(const SentenceTree& tree) {
  Formula f = to_formula(beta_normalize(sentence_term(tree)));
  if (!is_closed(f)) throw TranslationError("translation is not closed");
  return f;
}

std::vector<Formula> hyponymy_axioms(const std::vector<const SentenceTree*>& trees) {
  std::set<std::uint8_t> nouns, hypernyms;
  const Lexicon* lex = nullptr;
  for (const auto* t : trees) {
    lex = t->lexicon;
    auto visit = [&](const NounGroup& g) { (g.hypernym ? hypernyms : nouns).insert(g.noun); };
    for (const auto& np : t->chain) visit(np.noun);
    if (t->variant == StructureVariant::kObjectPosition) visit(t->host.noun);
  }
  std::vector<Formula> out;
  if (lex == nullptr) return out;
  for (auto n : nouns) {
    auto it = lex->hyponymy_map.find(lex->nouns[n]);
    if (it == lex->hyponymy_map.end()) continue;
    for (auto h : it->second) {
      if (!hypernyms.count(h)) continue;
      out.push_back(Formula::forall(
          0, Formula::implication(Formula::atom(symbolize(lex->nouns[n]), {0}),
                                  Formula::atom(symbolize(lex->hypernyms[h]), {0}))));
    }
  }
  return out;
}

}  // namespace monogen
