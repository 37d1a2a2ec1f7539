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

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace monogen {

// Simply typed lambda terms over first-order connectives. Predicate constants
// appear saturated (kAtom with variable arguments); lexical entries abstract
// over them.
struct LambdaTerm;
using Term = std::shared_ptr<const LambdaTerm>;

struct LambdaTerm {
  enum class Kind : std::uint8_t {
    kVar,
    kAbs,
    kApp,
    kAtom,
    kEq,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kExists,
    kForall,
  };
  Kind kind;
  std::string name;  // variable, binder, or predicate symbol
  std::vector<Term> args;
};

Term var(std::string name);
Term abs(std::string name, Term body);
Term app(Term f, Term a);
Term app(Term f, Term a, Term b);
Term atom(std::string predicate, std::vector<Term> args);
Term eq(Term a, Term b);
Term neg(Term t);
Term conj(std::vector<Term> parts);
Term disj(std::vector<Term> parts);
Term implies(Term a, Term b);
Term exists(std::string name, Term body);
Term forall(std::string name, Term body);

std::set<std::string> free_variables(const Term& t);

// Capture-avoiding t[x := s].
Term substitute(const Term& t, const std::string& x, const Term& s);

// Normal-order beta reduction to normal form.
Term beta_normalize(const Term& t);

bool is_beta_normal(const Term& t);

// λx.(dog(x) ∧ ran(x)) style rendering.
std::string to_string(const Term& t);

}  // namespace monogen
