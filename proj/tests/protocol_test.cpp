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

#include <set>

#include "monogen/dataset.hpp"
#include "monogen/errors.hpp"
#include "monogen/oracle.hpp"
#include "monogen/protocol.hpp"
#include "monogen/scorer.hpp"
#include "support/fixtures.hpp"
#include "support/split_checks.hpp"

namespace monogen {
namespace {

using testing::golden_lexicon;
using testing::small_aspect_config;
using testing::small_dataset;
using testing::small_plans;
using testing::small_pool;

std::vector<const SplitPlan*> plans_of(Aspect a) {
  std::vector<const SplitPlan*> out;
  for (const auto& p : small_plans()) {
    if (p.aspect == a) out.push_back(&p);
  }
  return out;
}

const std::vector<InferencePair>& small_variants() {
  static const std::vector<InferencePair> v = materialize_variants(small_plans(), small_pool());
  return v;
}

InferencePair several_small_dogs() {
  InferencePair p;
  p.id = "several_small";
  p.premise = "Several small dogs ran .";
  p.hypothesis = "Several dogs ran .";
  p.label = Label::kEntailment;
  p.depth = 1;
  p.quantifiers = {"several"};
  p.replacement = ReplacementId::kAdjective;
  p.target_polarity = Direction::kUpward;
  p.run_seed = 1;
  return p;
}

TEST(Protocol, PlanCounts) {
  EXPECT_EQ(plans_of(Aspect::kReplacementSystematicity).size(), 8u);  // 2 runs x steps 0..3
  EXPECT_EQ(plans_of(Aspect::kEmbeddingQuantifiers).size(), 6u);     // 2 runs x steps 1..3
  EXPECT_EQ(plans_of(Aspect::kProductivity).size(), 4u);             // 2 runs x i = 1, 2
  EXPECT_EQ(plans_of(Aspect::kLocalism).size(), 4u);                 // 2 runs x d = 3, 4
}

TEST(Protocol, AllPlansPassIntegrityChecks) {
  const GoldIndex gold = index_pairs({&small_dataset().train, &small_dataset().test});
  for (const auto& plan : small_plans()) {
    const auto violations = testing::check_plan(plan, gold);
    EXPECT_TRUE(violations.empty()) << plan.name() << ": " << violations.front();
  }
}

TEST(Protocol, ReplacementStepZeroInstantiatesDefinition) {
  const SplitPlan& plan = *plans_of(Aspect::kReplacementSystematicity).front();
  ASSERT_EQ(plan.step_index, 0);
  const std::set<std::string> train(plan.train_ids.begin(), plan.train_ids.end());
  const std::set<std::string> test(plan.test_ids.begin(), plan.test_ids.end());
  for (const auto& p : small_pool()) {
    if (p.depth != 1) continue;
    const bool anchor = p.quantifiers[0] == "some" || p.replacement == ReplacementId::kHyponym;
    EXPECT_EQ(train.count(p.id), anchor ? 1u : 0u) << p.id;
    EXPECT_EQ(test.count(p.id), anchor ? 0u : 1u) << p.id;
  }
  EXPECT_EQ(plan.held_out.quantifiers.size(), 7u);
  EXPECT_EQ(plan.held_out.replacement, ReplacementId::kHyponym);
}

TEST(Protocol, ReplacementLastStepLeavesOneQuantifier) {
  for (const auto* plan : plans_of(Aspect::kReplacementSystematicity)) {
    if (plan->step_index == 3) {
      EXPECT_EQ(plan->held_out.quantifiers.size(), 1u) << plan->name();
      EXPECT_EQ(plan->sequence.size(), 3u);
    }
  }
}

TEST(Protocol, EmbeddingStepsShrinkTestQuantifiers) {
  for (const auto* plan : plans_of(Aspect::kEmbeddingQuantifiers)) {
    EXPECT_EQ(plan->held_out.quantifiers.size(), static_cast<std::size_t>(8 - 2 * plan->step_index))
        << plan->name();
    EXPECT_EQ(plan->held_out.depths, std::set<int>{2});
  }
}

TEST(Protocol, EmbeddingTrainsEveryDepthOnePair) {
  std::set<std::string> d1;
  for (const auto& p : small_pool()) {
    if (p.depth == 1) d1.insert(p.id);
  }
  for (const auto* plan : plans_of(Aspect::kEmbeddingQuantifiers)) {
    const std::set<std::string> train(plan->train_ids.begin(), plan->train_ids.end());
    EXPECT_TRUE(std::includes(train.begin(), train.end(), d1.begin(), d1.end())) << plan->name();
  }
}

// "Several animals that chased several dogs ran" is tested whenever the
// run has not trained on "several" yet.
TEST(Protocol, EmbeddingTestsUnseenSeveral) {
  GenerationConfig g;
  g.seed = 2;
  g.max_depth = 2;
  g.per_depth_quota = 2000;
  g.exhaustive_below_depth = 2;
  g.lexicon = &golden_lexicon();
  std::vector<InferencePair> pool = build_inventory(g);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i].id = "g" + std::to_string(i);
  InferencePair ex = several_small_dogs();
  ex.id = "embedded_several";
  ex.premise = "Several animals that chased several dogs ran .";
  ex.hypothesis = "Several animals that chased several animals ran .";
  ex.depth = 2;
  ex.quantifiers = {"several", "several"};
  ex.replacement = ReplacementId::kHyponym;
  pool.push_back(ex);

  AspectConfig c;
  c.seed = 3;
  c.num_runs = 5;
  c.lexicon = &golden_lexicon();
  int checked = 0;
  for (const auto& plan : build_embedding_quantifiers(c, pool)) {
    if (plan.step_index != 1) continue;
    const auto& [up, down] = plan.sequence.front();
    const bool tested = std::count(plan.test_ids.begin(), plan.test_ids.end(), "embedded_several") == 1;
    EXPECT_EQ(tested, up != "several") << plan.name();
    checked += up != "several" ? 1 : 0;
  }
  EXPECT_GT(checked, 0);
}

TEST(Protocol, ProductivityDepths) {
  for (const auto* plan : plans_of(Aspect::kProductivity)) {
    std::set<int> train_depths;
    const GoldIndex gold = index_pairs({&small_dataset().train});
    for (const auto& id : plan->train_ids) train_depths.insert(gold.at(id)->depth);
    std::set<int> expected_train;
    for (int d = 1; d <= plan->step_index + 1; ++d) expected_train.insert(d);
    std::set<int> expected_test;
    for (int d = plan->step_index + 2; d <= 4; ++d) expected_test.insert(d);
    EXPECT_EQ(train_depths, expected_train) << plan->name();
    EXPECT_EQ(plan->held_out.depths, expected_test) << plan->name();
  }
}

TEST(Protocol, DirectionGroupsPartitionDepthGroups) {
  for (const auto* plan : plans_of(Aspect::kProductivity)) {
    for (int d : plan->held_out.depths) {
      const std::string key = "D" + std::to_string(d);
      const auto& all = plan->test_groups.at(key);
      std::set<std::string> merged;
      for (const char* dir : {"/upward", "/downward"}) {
        for (const auto& id : plan->test_groups.at(key + dir)) EXPECT_TRUE(merged.insert(id).second);
      }
      EXPECT_EQ(merged, std::set<std::string>(all.begin(), all.end())) << plan->name() << " " << key;
    }
  }
}

TEST(Protocol, LocalismGroups) {
  for (const auto* plan : plans_of(Aspect::kLocalism)) {
    int depth_groups = 0;
    for (const auto& [name, ids] : plan->test_groups) {
      depth_groups += name.size() == 2 && name[0] == 'D' ? 1 : 0;
    }
    EXPECT_EQ(depth_groups, plan->step_index) << plan->name();
  }
}

TEST(Protocol, RejectsSmallS) {
  AspectConfig c = small_aspect_config();
  c.s = 2;
  EXPECT_THROW(build_productivity(c, small_dataset().train, small_dataset().test), ConfigError);
  EXPECT_THROW(build_localism(c, small_dataset().train, small_dataset().test), ConfigError);
  c = small_aspect_config();
  c.num_runs = 0;
  EXPECT_THROW(build_localism(c, small_dataset().train, small_dataset().test), ConfigError);
}

TEST(Protocol, MissingCombinationIsCoverageError) {
  std::vector<InferencePair> pool = small_pool();
  std::erase_if(pool, [](const InferencePair& p) {
    return p.depth == 1 && p.quantifiers[0] == "few" && p.replacement == ReplacementId::kAdverb;
  });
  EXPECT_THROW(build_replacement_systematicity(small_aspect_config(), pool), CoverageError);
  std::erase_if(pool, [](const InferencePair& p) {
    return p.depth == 2 && p.quantifiers == std::vector<std::string>{"no", "few"};
  });
  EXPECT_THROW(build_embedding_quantifiers(small_aspect_config(), pool), CoverageError);
}

TEST(Protocol, Deterministic) {
  const AspectConfig c = small_aspect_config();
  EXPECT_EQ(build_replacement_systematicity(c, small_pool()),
            std::vector<SplitPlan>(small_plans().begin(), small_plans().begin() + 8));
  AspectConfig other = c;
  other.seed = 12;
  const auto a = build_embedding_quantifiers(c, small_pool());
  const auto b = build_embedding_quantifiers(other, small_pool());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].sequence != b[i].sequence;
  EXPECT_TRUE(differs);
}

TEST(Protocol, SequencesAreDisjointMatchings) {
  const AspectConfig c = small_aspect_config();
  for (int run = 0; run < 5; ++run) {
    const auto p = quantifier_sequence_for_run(c, run, {"some"}, 3);
    ASSERT_EQ(p.size(), 3u);
    std::set<std::string> used{"some"};
    for (const auto& [up, down] : p) {
      EXPECT_TRUE(used.insert(up).second);
      EXPECT_TRUE(used.insert(down).second);
    }
  }
}

TEST(Protocol, PlanJsonRoundTrip) {
  const auto dir = testing::scratch_dir("plans");
  for (const auto& plan : small_plans()) {
    EXPECT_EQ(plan_from_json(plan_to_json(plan)), plan);
  }
  write_plan(dir / "p.json", small_plans().front());
  EXPECT_EQ(read_plan(dir / "p.json"), small_plans().front());
  std::string text = plan_to_json(small_plans().front());
  text.replace(text.find(std::string(kPlanVersion)), kPlanVersion.size(), "monogen-plan/9");
  EXPECT_THROW(plan_from_json(text), SchemaError);
  EXPECT_THROW(plan_from_json("{"), ParseError);
}

TEST(Variant, AdverbPrefix) {
  const InferencePair v = make_structure_variant(several_small_dogs(), StructureVariant::kAdvPrefix,
                                                 golden_lexicon());
  const auto comma = v.premise.find(" , ");
  ASSERT_NE(comma, std::string::npos) << v.premise;
  const std::string adv = v.premise.substr(0, comma);
  EXPECT_EQ(v.premise, adv + " , several small dogs ran .");
  EXPECT_EQ(v.hypothesis, adv + " , several dogs ran .");
  EXPECT_EQ(v.label, Label::kEntailment);
  EXPECT_EQ(v.id, "several_small_adv");
  EXPECT_EQ(v.structure_variant, StructureVariant::kAdvPrefix);
}

TEST(Variant, PpPrefix) {
  const InferencePair v = make_structure_variant(several_small_dogs(), StructureVariant::kPpPrefix,
                                                 golden_lexicon());
  const auto comma = v.premise.find(" , ");
  ASSERT_NE(comma, std::string::npos);
  const std::string pp = v.premise.substr(0, comma);
  EXPECT_TRUE(golden_lexicon().index_of(golden_lexicon().pps, std::string(1, static_cast<char>(std::tolower(pp[0]))) + pp.substr(1)));
  EXPECT_EQ(v.hypothesis, pp + " , several dogs ran .");
  EXPECT_EQ(v.label, Label::kEntailment);
}

TEST(Variant, ObjectPosition) {
  const InferencePair v = make_structure_variant(several_small_dogs(), StructureVariant::kObjectPosition,
                                                 golden_lexicon());
  // "Some <noun> <tv> several small dogs ."
  const auto words = tokenize(v.premise);
  ASSERT_EQ(words.size(), 7u) << v.premise;
  EXPECT_EQ(words[0], "Some");
  EXPECT_TRUE(golden_lexicon().index_of(golden_lexicon().nouns, words[1])) << v.premise;
  EXPECT_TRUE(golden_lexicon().index_of(golden_lexicon().tv, words[2])) << v.premise;
  const std::string host = words[0] + " " + words[1] + " " + words[2];
  EXPECT_EQ(v.premise, host + " several small dogs .");
  EXPECT_EQ(v.hypothesis, host + " several dogs .");
  EXPECT_EQ(v.label, Label::kEntailment);
  EXPECT_EQ(v.target_polarity, Direction::kUpward);
}

TEST(Variant, RejectsDeepPairs) {
  for (const auto& p : small_pool()) {
    if (p.depth == 2) {
      EXPECT_THROW(make_structure_variant(p, StructureVariant::kAdvPrefix), UnsupportedVariantError);
      break;
    }
  }
  EXPECT_THROW(make_structure_variant(several_small_dogs(), StructureVariant::kBase, golden_lexicon()),
               UnsupportedVariantError);
}

TEST(Variant, MaterializedVariantsKeepBaseLabel) {
  const GoldIndex gold = index_pairs({&small_dataset().train, &small_dataset().test});
  std::size_t n = 0;
  for (const auto& v : small_variants()) {
    const std::string base = v.id.substr(0, v.id.rfind('_'));
    ASSERT_TRUE(gold.count(base)) << v.id;
    EXPECT_EQ(v.label, gold.at(base)->label) << v.id;
    EXPECT_EQ(v.replacement, gold.at(base)->replacement);
    ++n;
  }
  EXPECT_GT(n, 0u);
}

TEST(Variant, OracleConfirmsSample) {
  std::vector<InferencePair> sample;
  const auto& vs = small_variants();
  for (std::size_t i = 0; i < vs.size(); i += std::max<std::size_t>(1, vs.size() / 60)) sample.push_back(vs[i]);
  const auto results = verify_pairs(sample, 6, ExecutionPolicy::kParallel);
  for (const auto& r : results) EXPECT_TRUE(r.agrees && r.error.empty()) << r.id << " " << r.error;
}

}  // namespace
}  // namespace monogen
