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
#include <string>
#include <vector>

#include "monogen/lexicon.hpp"
#include "monogen/sentence.hpp"

namespace monogen {

enum class Slot : std::uint8_t { kNoun, kVerb };
enum class Argument : std::uint8_t { kFirst, kSecond };

std::string_view to_string(Argument a);
Argument argument_from_string(std::string_view s);

// A replaceable constituent. `np` indexes the embedding chain for nouns; the
// object-position frame's subject noun uses kHostNp. Verbs use np = 0.
struct Position {
  static constexpr int kHostNp = -1;
  int np = 0;
  Slot slot = Slot::kNoun;

  auto operator<=>(const Position&) const = default;
};

struct TargetPosition {
  Position position;
  Argument argument = Argument::kFirst;
  Direction polarity = Direction::kUpward;
  // Number of enclosing quantifiers (1 = matrix argument).
  int nesting = 1;

  bool operator==(const TargetPosition&) const = default;
};

struct PolarityMarkedTree {
  SentenceTree tree;
  std::map<Position, Direction> marks;
  std::vector<TargetPosition> target_positions;
  // Polarity of the whole sentence: always upward (empty quantifier path).
  Direction sentence_mark = Direction::kUpward;

  Direction mark(Position p) const { return marks.at(p); }
};

// Marks every noun and verb with the sign product of the monotonicity
// directions of the quantifiers whose arguments contain it.
PolarityMarkedTree mark_polarity(const SentenceTree& tree);

// One line: the surface string with ↑/↓ after each marked head, e.g.
// "Some puppies↑ which chased no cats↓ ran↑ ."
std::string polarity_dump(const PolarityMarkedTree& marked);

}  // namespace monogen
