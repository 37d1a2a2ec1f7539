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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monogen/formula.hpp"
#include "monogen/lexicon.hpp"
#include "monogen/replacement.hpp"

namespace monogen {

struct FiniteModel {
  int domain_size = 1;  // elements are 0 .. domain_size-1, printed e1 ..
  std::map<std::string, std::set<std::vector<int>>> extensions;

  bool operator==(const FiniteModel&) const = default;
};

// Truth of a closed formula in a model. Predicates absent from `extensions`
// are empty.
bool evaluate(const Formula& f, const FiniteModel& model);

// {e1 ∈ dog, e1 ∈ ran, e1 ∉ small}; lists every tuple of the given signature.
std::string to_string(const FiniteModel& model, const Signature& sig);

enum class Verdict : std::uint8_t { kEntailed, kCountermodelFound };
std::string_view to_string(Verdict v);

struct EntailmentResult {
  Verdict verdict = Verdict::kEntailed;
  std::optional<FiniteModel> countermodel;
  Signature signature;  // predicates the search ranged over
};

// Searches domain sizes 1..max_domain in order for a model of
// premise ∧ axioms ∧ ¬hypothesis by grounding to SAT.
EntailmentResult check_entailment_finite(const Formula& premise, const Formula& hypothesis,
                                         const std::vector<Formula>& axioms, int max_domain);

// Parses and translates both sides and adds the hyponymy axioms they need.
EntailmentResult check_entailment_finite(const InferencePair& pair, int max_domain,
                                         const Lexicon& lexicon = Lexicon::standard());

// A label the oracle implies: entailed -> entailment.
Label oracle_label(Verdict v);

struct VerificationResult {
  std::string id;
  Label expected = Label::kEntailment;
  Verdict verdict = Verdict::kEntailed;
  bool agrees = false;
  std::string error;  // set when the pair could not be translated

  bool operator==(const VerificationResult&) const = default;
};

enum class ExecutionPolicy : std::uint8_t { kSerial, kParallel };

// Oracle check per pair. The parallel policy distributes pairs over OpenMP
// threads; results are identical to the serial reference and in input order.
std::vector<VerificationResult> verify_pairs(const std::vector<InferencePair>& pairs,
                                             int max_domain, ExecutionPolicy policy,
                                             const Lexicon& lexicon = Lexicon::standard());

struct VerificationSummary {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
};

VerificationSummary summarize(const std::vector<VerificationResult>& results);

}  // namespace monogen
