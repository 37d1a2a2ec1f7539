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

#include <string>
#include <string_view>

#include "monogen/formula.hpp"
#include "monogen/lexicon.hpp"
#include "monogen/replacement.hpp"

namespace monogen {

// TPTP variable names by level: X, Y, Z, W, V, U, then X6, X7, ...
std::string tptp_variable(int level);

// ? [X] : (dog(X) & ran(X))
std::string to_tptp(const Formula& f);

// One FOF problem: hyponymy axioms, the premise as an axiom and the
// hypothesis as the conjecture.
std::string export_tptp(const InferencePair& pair, const Lexicon& lexicon = Lexicon::standard());

struct TptpDiagnostic {
  bool ok = true;
  int line = 0;
  int column = 0;
  std::string message;
};

// Validates TPTP FOF syntax: annotated formulas, comments, roles, the
// connective grammar, bound variables, and consistent symbol arities.
TptpDiagnostic check_tptp_syntax(std::string_view text);

}  // namespace monogen
