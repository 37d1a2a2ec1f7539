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

#include "monogen/polarity.hpp"

#include "monogen/errors.hpp"

namespace monogen {

std::string_view to_string(Argument a) { return a == Argument::kFirst ? "first" : "second"; }

Argument argument_from_string(std::string_view s) {
  if (s == "first") return Argument::kFirst;
  if (s == "second") return Argument::kSecond;
  throw ParseError("unknown argument '" + std::string(s) + "'");
}

PolarityMarkedTree mark_polarity(const SentenceTree& tree) {
  const Lexicon& lex = *tree.lexicon;
  PolarityMarkedTree out;
  out.tree = tree;

  const bool object = tree.variant == StructureVariant::kObjectPosition;
  Direction path = Direction::kUpward;
  int nesting = 0;
  if (object) {
    // The host quantifier's restrictor is its own noun; the object NP sits in
    // its scope (second argument).
    const Direction host = lex.quantifiers[tree.host.quantifier].direction;
    out.marks[{Position::kHostNp, Slot::kNoun}] = host;
    path = host;
    nesting = 1;
  }
  for (std::size_t k = 0; k < tree.chain.size(); ++k) {
    path = compose(path, lex.quantifiers[tree.chain[k].quantifier].direction);
    ++nesting;
    Position p{static_cast<int>(k), Slot::kNoun};
    out.marks[p] = path;
    out.target_positions.push_back({p, Argument::kFirst, path, nesting});
  }
  if (has_verb(tree)) {
    Position p{0, Slot::kVerb};
    Direction d;
    Argument arg;
    int verb_nesting;
    if (object) {
      // Relative verb inside the object NP's restrictor.
      d = compose(lex.quantifiers[tree.host.quantifier].direction,
                  lex.quantifiers[tree.chain[0].quantifier].direction);
      arg = Argument::kFirst;
      verb_nesting = 2;
    } else {
      d = lex.quantifiers[tree.chain[0].quantifier].direction;
      arg = Argument::kSecond;
      verb_nesting = 1;
    }
    out.marks[p] = d;
    out.target_positions.push_back({p, arg, d, verb_nesting});
  }
  return out;
}

std::string polarity_dump(const PolarityMarkedTree& marked) {
  std::string out;
  auto arrow = [](Direction d) { return d == Direction::kUpward ? "↑" : "↓"; };
  for (const auto& tok : surface_tokens(marked.tree)) {
    if (!out.empty()) out.push_back(' ');
    out += tok.text;
    switch (tok.role) {
      case SurfaceToken::Role::kNounHead:
        out += arrow(marked.mark({tok.np, Slot::kNoun}));
        break;
      case SurfaceToken::Role::kHostNounHead:
        out += arrow(marked.mark({Position::kHostNp, Slot::kNoun}));
        break;
      case SurfaceToken::Role::kVerbHead:
        out += arrow(marked.mark({0, Slot::kVerb}));
        break;
      case SurfaceToken::Role::kOther:
        break;
    }
  }
  return out;
}

}  // namespace monogen
