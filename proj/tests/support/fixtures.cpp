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

#include "support/fixtures.hpp"

namespace monogen::testing {

const Lexicon& golden_lexicon() {
  static const Lexicon lexicon =
      Lexicon::load(std::filesystem::path(MONOGEN_TEST_DATA_DIR) / "golden_lexicon.txt");
  return lexicon;
}

DatasetConfig small_config(std::uint64_t seed) {
  DatasetConfig c;
  c.generation.seed = seed;
  c.generation.max_depth = 4;
  c.generation.per_depth_quota = 4096;
  c.generation.exhaustive_below_depth = 2;
  c.train_cap = 12000;
  c.test_cap = 3000;
  c.total_cap = 15000;
  return c;
}

const Dataset& small_dataset() {
  static const Dataset ds = generate_dataset(small_config());
  return ds;
}

const std::vector<InferencePair>& small_pool() {
  static const std::vector<InferencePair> pool = [] {
    std::vector<InferencePair> all = small_dataset().train;
    all.insert(all.end(), small_dataset().test.begin(), small_dataset().test.end());
    return all;
  }();
  return pool;
}

AspectConfig small_aspect_config() {
  AspectConfig c;
  c.seed = 11;
  c.num_runs = 2;
  c.s = 4;
  return c;
}

const std::vector<SplitPlan>& small_plans() {
  static const std::vector<SplitPlan> plans = [] {
    const AspectConfig c = small_aspect_config();
    const Dataset& ds = small_dataset();
    std::vector<SplitPlan> all = build_replacement_systematicity(c, small_pool());
    for (auto& p : build_embedding_quantifiers(c, small_pool())) all.push_back(std::move(p));
    for (auto& p : build_productivity(c, ds.train, ds.test)) all.push_back(std::move(p));
    for (auto& p : build_localism(c, ds.train, ds.test)) all.push_back(std::move(p));
    return all;
  }();
  return plans;
}

SentenceTree golden(std::string_view sentence) { return parse_sentence(sentence, golden_lexicon()); }

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("monogen_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace monogen::testing
