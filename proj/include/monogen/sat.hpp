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

#include <cstdint>
#include <vector>

namespace monogen {

// Conflict-driven clause-learning SAT solver: two watched literals, VSIDS,
// first-UIP learning, phase saving, Luby restarts. Literals use the DIMACS
// convention (variable v > 0 as v, its negation as -v). Fully deterministic.
class SatSolver {
 public:
  int new_var();
  int num_vars() const { return static_cast<int>(assign_.size()); }
  void add_clause(std::vector<int> literals);
  bool solve();
  // Model value after a satisfiable solve().
  bool value(int var) const { return assign_[static_cast<std::size_t>(var - 1)] == 1; }

  std::uint64_t conflicts() const { return conflicts_; }

 private:
  using Lit = std::uint32_t;  // 2 * index + sign
  static Lit to_lit(int dimacs);
  static std::uint32_t var_of(Lit l) { return l >> 1; }
  static bool sign_of(Lit l) { return l & 1; }

  // 1 true, 0 false, -1 unassigned.
  int lit_value(Lit l) const;
  void enqueue(Lit l, int reason);
  int propagate();
  void analyze(int conflict, std::vector<Lit>& learnt, int& backjump);
  void backtrack(int level);
  int pick_branch();
  void attach(int clause);
  void bump(std::uint32_t v);

  void heap_insert(std::uint32_t v);
  void heap_up(std::size_t i);
  void heap_down(std::size_t i);
  std::uint32_t heap_pop();

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;  // per literal
  std::vector<std::int8_t> assign_;
  std::vector<std::int8_t> phase_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<std::uint32_t> heap_;
  std::vector<int> heap_pos_;  // -1 when absent
  std::vector<std::uint8_t> seen_;
  bool unsat_ = false;
  std::uint64_t conflicts_ = 0;
};

}  // namespace monogen
