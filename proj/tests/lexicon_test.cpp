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

#include "monogen/errors.hpp"
#include "monogen/lexicon.hpp"
#include "support/fixtures.hpp"

namespace monogen {
namespace {

TEST(Lexicon, EightQuantifiersSplitByDirection) {
  const Lexicon& lex = Lexicon::standard();
  ASSERT_EQ(lex.quantifiers.size(), 8u);
  std::set<std::string> up;
  std::set<std::string> down;
  for (const auto& q : lex.quantifiers) {
    (q.direction == Direction::kUpward ? up : down).insert(q.surface_form);
  }
  EXPECT_EQ(down, (std::set<std::string>{"no", "at most three", "less than three", "few"}));
  EXPECT_EQ(up, (std::set<std::string>{"some", "at least three", "more than three", "a few"}));
}

TEST(Lexicon, CategorySizes) {
  const Lexicon& lex = Lexicon::standard();
  EXPECT_EQ(lex.nouns.size(), 10u);
  EXPECT_EQ(lex.iv1.size(), 10u);
  EXPECT_EQ(lex.iv2.size(), 5u);
  EXPECT_EQ(lex.tv.size(), 10u);
  EXPECT_EQ(lex.hypernyms.size(), 4u);
  EXPECT_EQ(lex.adjectives.size(), 5u);
  EXPECT_EQ(lex.pps.size(), 5u);
  EXPECT_EQ(lex.relcs.size(), 4u);
  EXPECT_EQ(lex.advs.size(), 5u);
  EXPECT_EQ(lex.whnps.size(), 2u);
}

TEST(Lexicon, StandardMatchesDataFile) {
  const Lexicon file = Lexicon::load(std::filesystem::path(MONOGEN_DATA_DIR) / "lexicon.txt");
  EXPECT_EQ(file, Lexicon::standard());
}

TEST(Lexicon, EveryNounHasAHypernym) {
  const Lexicon& lex = Lexicon::standard();
  for (const auto& n : lex.nouns) {
    ASSERT_TRUE(lex.hyponymy_map.count(n)) << n;
    EXPECT_FALSE(lex.hyponymy_map.at(n).empty()) << n;
  }
}

TEST(Lexicon, QuantifierLookup) {
  const Lexicon& lex = Lexicon::standard();
  auto i = lex.quantifier_index("more than three");
  ASSERT_TRUE(i.has_value());
  EXPECT_EQ(lex.quantifiers[*i].counting_semantics, CountingSemantics::kMoreThan3);
  EXPECT_FALSE(lex.quantifier_index("most").has_value());
}

TEST(Lexicon, Pluralize) {
  EXPECT_EQ(pluralize("dog"), "dogs");
  EXPECT_EQ(pluralize("wolf"), "wolves");
  EXPECT_EQ(pluralize("fox"), "foxes");
  EXPECT_EQ(pluralize("puppy"), "puppies");
  EXPECT_EQ(symbolize("near the shore"), "near_the_shore");
}

TEST(Lexicon, DirectionHelpers) {
  EXPECT_EQ(compose(Direction::kDownward, Direction::kDownward), Direction::kUpward);
  EXPECT_EQ(compose(Direction::kUpward, Direction::kDownward), Direction::kDownward);
  EXPECT_EQ(flip(Direction::kUpward), Direction::kDownward);
  EXPECT_EQ(direction_from_string("downward"), Direction::kDownward);
  EXPECT_THROW(direction_from_string("sideways"), ConfigError);
}

TEST(Lexicon, RejectsMalformedFiles) {
  EXPECT_THROW(Lexicon::parse("N dog | cat\n"), ConfigError);
  EXPECT_THROW(Lexicon::parse("Q -> some {upward, both}\nN -> dog\n"), ConfigError);
  EXPECT_THROW(Lexicon::parse("Verbs -> ran\n"), ConfigError);
}

TEST(Lexicon, GoldenLexiconExtendsStandard) {
  const Lexicon& g = testing::golden_lexicon();
  EXPECT_TRUE(g.quantifier_index("several").has_value());
  EXPECT_TRUE(g.index_of(g.nouns, "puppy").has_value());
  EXPECT_TRUE(g.index_of(g.tv, "chased").has_value());
  EXPECT_EQ(g.quantifiers.size(), 9u);
}

}  // namespace
}  // namespace monogen
