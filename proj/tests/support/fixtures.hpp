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

#include <filesystem>
#include <string>
#include <vector>

#include "monogen/dataset.hpp"
#include "monogen/lexicon.hpp"
#include "monogen/protocol.hpp"
#include "monogen/sentence.hpp"

namespace monogen::testing {

// Standard vocabulary plus "several", "puppy" and "chased".
const Lexicon& golden_lexicon();

// Depth-4 dataset, 12k/3k caps, depth 2 sampled. Built once per process.
const Dataset& small_dataset();
DatasetConfig small_config(std::uint64_t seed = 3);

// Train and test pairs of small_dataset() in one vector.
const std::vector<InferencePair>& small_pool();

// Plans for every aspect over small_dataset() (two runs, s = 4).
const std::vector<SplitPlan>& small_plans();
AspectConfig small_aspect_config();

SentenceTree golden(std::string_view sentence);

// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

}  // namespace monogen::testing
