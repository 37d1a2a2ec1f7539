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

#include <gtest/gtest.h>

#include <random>

#include "monogen/dataset.hpp"
#include "monogen/errors.hpp"
#include "monogen/formula.hpp"
#include "monogen/lambda.hpp"
#include "monogen/oracle.hpp"
#include "monogen/sat.hpp"
#include "monogen/sentence.hpp"
#include "monogen/tptp.hpp"

namespace monogen {
namespace {

std::string fol(std::string_view s) { return to_string(translate(parse_sentence(s, Lexicon::standard()))); }

InferencePair pair(std::string premise, std::string hypothesis) {
  InferencePair p;
  p.id = "t";
  p.premise = std::move(premise);
  p.hypothesis = std::move(hypothesis);
  return p;
}

TEST(Translate, Existential) { EXPECT_EQ(fol("Some dogs ran"), "∃x(dog(x) ∧ ran(x))"); }

TEST(Translate, Few) { EXPECT_EQ(fol("Few lions walked"), "¬∃x(few(x) ∧ lion(x) ∧ walked(x))"); }

TEST(Translate, AtLeastThree) {
  EXPECT_EQ(fol("At least three dogs ran"),
            "∃x∃y∃z(x≠y ∧ x≠z ∧ y≠z ∧ dog(x) ∧ ran(x) ∧ dog(y) ∧ ran(y) ∧ dog(z) ∧ ran(z))");
}

TEST(Translate, ClauseArgumentOrder) {
  EXPECT_EQ(fol("Some dogs that kissed some cats ran"), "∃x(dog(x) ∧ ∃y(cat(y) ∧ kissed(x,y)) ∧ ran(x))");
  EXPECT_EQ(fol("Some dogs which some cats kissed ran"), "∃x(dog(x) ∧ ∃y(cat(y) ∧ kissed(y,x)) ∧ ran(x))");
  EXPECT_EQ(fol("Some dogs some cats kissed ran"), "∃x(dog(x) ∧ ∃y(cat(y) ∧ kissed(y,x)) ∧ ran(x))");
}

TEST(Translate, ClosedOnGeneratorOutput) {
  GenerationConfig c;
  c.seed = 1;
  c.max_depth = 5;
  c.per_depth_quota = 32768;
  c.exhaustive_below_depth = 2;
  for (int depth = 1; depth <= 5; ++depth) {
    int n = 0;
    for_each_premise(c, depth, [&](const SentenceTree& t) {
      if (n++ % 97 != 0) return;
      const Term term = beta_normalize(sentence_term(t));
      ASSERT_TRUE(is_beta_normal(term));
      ASSERT_TRUE(free_variables(term).empty());
      ASSERT_TRUE(is_closed(translate(t))) << linearize(t);
    });
  }
}

TEST(Lambda, BetaReduction) {
  const Term id = abs("x", var("x"));
  const Term t = beta_normalize(app(id, atom("dog", {var("y")})));
  EXPECT_EQ(to_string(t), "dog(y)");
  // Capture avoidance: (λx.∃y.r(x,y)) y
  const Term f = abs("x", exists("y", atom("r", {var("x"), var("y")})));
  const Term g = beta_normalize(app(f, var("y")));
  EXPECT_EQ(free_variables(g), (std::set<std::string>{"y"}));
}

TEST(Oracle, HypernymEntailed) {
  const auto r = check_entailment_finite(pair("Some dogs ran", "Some animals ran"), 7);
  EXPECT_EQ(r.verdict, Verdict::kEntailed);
}

TEST(Oracle, Reflexive) {
  for (const char* s : {"Some dogs ran", "Few lions that hurt at most three dogs walked",
                        "More than three cats which no dogs kissed swam"}) {
    EXPECT_EQ(check_entailment_finite(pair(s, s), 7).verdict, Verdict::kEntailed) << s;
  }
}

TEST(Oracle, SmallestCountermodel) {
  const auto r = check_entailment_finite(pair("Some dogs ran", "Some small dogs ran"), 7);
  ASSERT_EQ(r.verdict, Verdict::kCountermodelFound);
  ASSERT_TRUE(r.countermodel.has_value());
  EXPECT_EQ(r.countermodel->domain_size, 1);
  EXPECT_EQ(to_string(*r.countermodel, r.signature), "{e1 ∈ dog, e1 ∈ ran, e1 ∉ small}");
}

TEST(Oracle, CountermodelsSatisfyPremiseNotHypothesis) {
  const Lexicon& lex = Lexicon::standard();
  const char* cases[][2] = {
      {"More than three dogs ran", "More than three small dogs ran"},
      {"No dogs ran", "No animals ran"},
      {"At most three dogs ran slowly", "At most three dogs ran"},
      {"Some dogs that kissed no small cats ran", "Some dogs that kissed no cats ran"},
  };
  for (const auto& c : cases) {
    const Formula p = translate(parse_sentence(c[0], lex));
    const Formula h = translate(parse_sentence(c[1], lex));
    const auto r = check_entailment_finite(pair(c[0], c[1]), 7);
    ASSERT_EQ(r.verdict, Verdict::kCountermodelFound) << c[0];
    EXPECT_TRUE(evaluate(p, *r.countermodel)) << c[0];
    EXPECT_FALSE(evaluate(h, *r.countermodel)) << c[1];
  }
}

TEST(Oracle, CountingNeedsLargerDomain) {
  const auto r = check_entailment_finite(pair("Some dogs ran", "More than three dogs ran"), 7);
  ASSERT_EQ(r.verdict, Verdict::kCountermodelFound);
  EXPECT_EQ(r.countermodel->domain_size, 1);
  const auto s = check_entailment_finite(pair("Less than three dogs ran", "No dogs ran"), 7);
  ASSERT_EQ(s.verdict, Verdict::kCountermodelFound);
  EXPECT_EQ(s.countermodel->domain_size, 1);
  const auto t = check_entailment_finite(pair("At most three dogs ran", "Less than three dogs ran"), 7);
  ASSERT_EQ(t.verdict, Verdict::kCountermodelFound);
  EXPECT_EQ(t.countermodel->domain_size, 3);
}

TEST(Oracle, RejectsBadBound) {
  EXPECT_THROW(check_entailment_finite(pair("Some dogs ran", "Some dogs ran"), 0), ConfigError);
}

TEST(Oracle, StableBetweenBoundsFiveAndSeven) {
  GenerationConfig c;
  c.seed = 21;
  c.max_depth = 2;
  c.per_depth_quota = 64;
  c.exhaustive_below_depth = 2;
  const auto sample = sample_pairs(c, 120);
  const auto at5 = verify_pairs(sample, 5, ExecutionPolicy::kSerial);
  const auto at7 = verify_pairs(sample, 7, ExecutionPolicy::kSerial);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    EXPECT_EQ(at5[i].verdict, at7[i].verdict) << sample[i].premise << " => " << sample[i].hypothesis;
    EXPECT_TRUE(at7[i].agrees) << sample[i].premise << " => " << sample[i].hypothesis;
  }
}

TEST(Oracle, SerialEqualsParallel) {
  GenerationConfig c;
  c.seed = 8;
  c.max_depth = 3;
  c.per_depth_quota = 512;
  c.exhaustive_below_depth = 2;
  const auto sample = sample_pairs(c, 150);
  const auto serial = verify_pairs(sample, 6, ExecutionPolicy::kSerial);
  const auto parallel = verify_pairs(sample, 6, ExecutionPolicy::kParallel);
  EXPECT_EQ(serial, parallel);
  const auto s = summarize(serial);
  EXPECT_EQ(s.checked, 150u);
  EXPECT_EQ(s.mismatches, 0u);
  EXPECT_EQ(s.errors, 0u);
}

TEST(Oracle, SampleSpansStrata) {
  GenerationConfig c;
  c.seed = 4;
  c.max_depth = 3;
  c.per_depth_quota = 512;
  c.exhaustive_below_depth = 2;
  const auto sample = sample_pairs(c, 300);
  ASSERT_EQ(sample.size(), 300u);
  std::set<std::pair<int, ReplacementId>> strata;
  std::set<std::string> ids;
  for (const auto& p : sample) {
    strata.insert({p.depth, p.replacement});
    ids.insert(p.id);
  }
  EXPECT_EQ(strata.size(), 15u);  // 7 functions at depth 1, r1-r4 deeper
  EXPECT_EQ(ids.size(), sample.size());
  EXPECT_EQ(sample, sample_pairs(c, 300));
}

TEST(Oracle, ReportsUntranslatablePairs) {
  InferencePair bad = pair("Most dogs ran", "Some dogs ran");
  const auto r = verify_pairs({bad}, 4, ExecutionPolicy::kSerial);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r[0].error.empty());
  EXPECT_EQ(summarize(r).errors, 1u);
}

// Exhaustive check of the solver on small random CNFs.
TEST(Sat, AgreesWithBruteForce) {
  std::mt19937 rng(17);
  for (int round = 0; round < 300; ++round) {
    const int vars = 3 + static_cast<int>(rng() % 8);
    const int clauses = 1 + static_cast<int>(rng() % (5 * vars));
    std::vector<std::vector<int>> cnf;
    for (int c = 0; c < clauses; ++c) {
      std::vector<int> cl;
      for (int k = 0; k < 3; ++k) {
        const int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(vars));
        cl.push_back(rng() % 2 ? v : -v);
      }
      cnf.push_back(cl);
    }
    bool brute = false;
    for (unsigned m = 0; m < (1u << vars) && !brute; ++m) {
      bool all = true;
      for (const auto& cl : cnf) {
        bool any = false;
        for (int l : cl) any = any || (((m >> (std::abs(l) - 1)) & 1) == (l > 0 ? 1u : 0u));
        all = all && any;
      }
      brute = all;
    }
    SatSolver s;
    for (int v = 0; v < vars; ++v) s.new_var();
    for (const auto& cl : cnf) s.add_clause(cl);
    const bool sat = s.solve();
    ASSERT_EQ(sat, brute) << "round " << round;
    if (sat) {
      for (const auto& cl : cnf) {
        bool any = false;
        for (int l : cl) any = any || (s.value(std::abs(l)) == (l > 0));
        ASSERT_TRUE(any);
      }
    }
  }
}

TEST(Sat, PigeonholeIsUnsat) {
  // 5 pigeons, 4 holes.
  SatSolver s;
  auto x = [](int p, int h) { return p * 4 + h + 1; };
  for (int i = 0; i < 20; ++i) s.new_var();
  for (int p = 0; p < 5; ++p) s.add_clause({x(p, 0), x(p, 1), x(p, 2), x(p, 3)});
  for (int h = 0; h < 4; ++h) {
    for (int p = 0; p < 5; ++p) {
      for (int q = p + 1; q < 5; ++q) s.add_clause({-x(p, h), -x(q, h)});
    }
  }
  EXPECT_FALSE(s.solve());
}

TEST(Sat, EmptyClauseIsUnsat) {
  SatSolver s;
  s.new_var();
  s.add_clause({});
  EXPECT_FALSE(s.solve());
}

TEST(Tptp, HypernymExport) {
  const std::string text = export_tptp(pair("Some dogs ran", "Some animals ran"));
  EXPECT_NE(text.find("fof(premise, axiom, ? [X] : (dog(X) & ran(X)))."), std::string::npos) << text;
  EXPECT_NE(text.find("fof(hypothesis, conjecture, ? [X] : (animal(X) & ran(X)))."), std::string::npos)
      << text;
  EXPECT_NE(text.find("! [X] : (dog(X) => animal(X))"), std::string::npos) << text;
  EXPECT_TRUE(check_tptp_syntax(text).ok) << check_tptp_syntax(text).message;
}

TEST(Tptp, ReflexivePairIsAlphaEquivalent) {
  const std::string text = export_tptp(pair("No dogs ran", "No dogs ran"));
  EXPECT_NE(text.find("fof(premise, axiom, ~ ? [X] : (dog(X) & ran(X)))."), std::string::npos);
  EXPECT_NE(text.find("fof(hypothesis, conjecture, ~ ? [X] : (dog(X) & ran(X)))."), std::string::npos);
}

TEST(Tptp, DownwardPairUsesNegatedExistentials) {
  const std::string text =
      export_tptp(pair("Less than three lions left", "Less than three lions left and cried"));
  EXPECT_NE(text.find("fof(premise, axiom, ~ ? [X,Y,Z]"), std::string::npos) << text;
  EXPECT_NE(text.find("fof(hypothesis, conjecture, ~ ? [X,Y,Z]"), std::string::npos) << text;
  EXPECT_EQ(text.find("conjecture, ? ["), std::string::npos);
  EXPECT_TRUE(check_tptp_syntax(text).ok);
}

TEST(Tptp, VariableNames) {
  EXPECT_EQ(tptp_variable(0), "X");
  EXPECT_EQ(tptp_variable(5), "U");
  EXPECT_EQ(tptp_variable(6), "X6");
}

TEST(Tptp, SyntaxCheckerRejectsErrors) {
  const char* bad[] = {
      "fof(a, axiom, p(X)).",                             // free variable
      "fof(a, axiom, ? [X] : p(X))",                      // missing period
      "fof(a, lemma_x, ? [X] : p(X)).",                   // unknown role
      "fof(a, axiom, ? [X] : (p(X) & )).",                // dangling connective
      "fof(a, axiom, ? [X] : p(X)).\nfof(b, axiom, ? [X,Y] : p(X,Y)).",  // arity clash
      "fof(A, axiom, ? [X] : p(X)).",                     // name is a variable
      "fof(a, axiom, ? [x] : p(x)).",                     // lowercase bound variable
  };
  for (const char* text : bad) {
    const auto d = check_tptp_syntax(text);
    EXPECT_FALSE(d.ok) << text;
    EXPECT_GT(d.line, 0) << text;
  }
  const auto ok = check_tptp_syntax(
      "% comment\nfof(a, axiom, ! [X] : (p(X) => q(X))).\nfof(b, conjecture, ~ ? [X,Y] : (X != Y & "
      "p(X) & (q(Y) | ~ q(X)))).\n");
  EXPECT_TRUE(ok.ok) << ok.message;
}

TEST(Tptp, GeneratedPairsPassChecker) {
  GenerationConfig c;
  c.seed = 13;
  c.max_depth = 3;
  c.per_depth_quota = 512;
  c.exhaustive_below_depth = 2;
  for (const auto& p : sample_pairs(c, 200)) {
    const auto d = check_tptp_syntax(export_tptp(p));
    ASSERT_TRUE(d.ok) << p.id << ": " << d.message;
  }
}

}  // namespace
}  // namespace monogen
