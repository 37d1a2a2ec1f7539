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

#include "monogen/sat.hpp"

#include <algorithm>
#include <cstdlib>

namespace monogen {
namespace {

constexpr double kVarDecay = 0.95;
constexpr int kRestartUnit = 100;

double luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

}  // namespace

SatSolver::Lit SatSolver::to_lit(int dimacs) {
  const auto v = static_cast<std::uint32_t>(std::abs(dimacs) - 1);
  return 2 * v + (dimacs < 0 ? 1u : 0u);
}

int SatSolver::new_var() {
  const auto v = static_cast<std::uint32_t>(assign_.size());
  assign_.push_back(-1);
  phase_.push_back(1);  // prefer false
  level_.push_back(0);
  reason_.push_back(-1);
  activity_.push_back(0.0);
  seen_.push_back(0);
  heap_pos_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return static_cast<int>(v) + 1;
}

int SatSolver::lit_value(Lit l) const {
  const int a = assign_[var_of(l)];
  if (a < 0) return -1;
  return sign_of(l) ? 1 - a : a;
}

void SatSolver::add_clause(std::vector<int> literals) {
  if (unsat_) return;
  // Only called at decision level 0, before or between solves.
  backtrack(0);
  std::vector<Lit> c;
  for (int d : literals) c.push_back(to_lit(d));
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i + 1 < c.size() && var_of(c[i]) == var_of(c[i + 1])) return;  // tautology
    const int val = lit_value(c[i]);
    if (val == 1) return;
    if (val == 0) continue;
    kept.push_back(c[i]);
  }
  if (kept.empty()) {
    unsat_ = true;
    return;
  }
  if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) unsat_ = true;
    return;
  }
  clauses_.push_back(std::move(kept));
  attach(static_cast<int>(clauses_.size()) - 1);
}

void SatSolver::attach(int clause) {
  const auto& c = clauses_[static_cast<std::size_t>(clause)];
  watches_[c[0] ^ 1].push_back(clause);
  watches_[c[1] ^ 1].push_back(clause);
}

void SatSolver::enqueue(Lit l, int reason) {
  const auto v = var_of(l);
  assign_[v] = sign_of(l) ? 0 : 1;
  level_[v] = static_cast<int>(trail_lim_.size());
  reason_[v] = reason;
  trail_.push_back(l);
}

// Returns the index of a conflicting clause, or -1.
int SatSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];  // p became true; visit clauses watching ¬p
    auto& ws = watches_[p];
    std::size_t i = 0, j = 0;
    int conflict = -1;
    while (i < ws.size()) {
      const int ci = ws[i++];
      auto& c = clauses_[static_cast<std::size_t>(ci)];
      const Lit false_lit = p ^ 1;
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (lit_value(c[0]) == 1) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (lit_value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1] ^ 1].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (lit_value(c[0]) == 0) {
        conflict = ci;
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        enqueue(c[0], ci);
      }
    }
    ws.resize(j);
    if (conflict >= 0) return conflict;
  }
  return -1;
}

void SatSolver::bump(std::uint32_t v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(static_cast<std::size_t>(heap_pos_[v]));
}

void SatSolver::analyze(int conflict, std::vector<Lit>& learnt, int& backjump) {
  learnt.assign(1, 0);
  const int current = static_cast<int>(trail_lim_.size());
  int pending = 0;
  Lit p = 0;
  bool have_p = false;
  std::size_t index = trail_.size();
  int ci = conflict;
  do {
    const auto& c = clauses_[static_cast<std::size_t>(ci)];
    for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
      const Lit q = c[k];
      const auto v = var_of(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump(v);
      if (level_[v] >= current) {
        ++pending;
      } else {
        learnt.push_back(q);
      }
    }
    do {
      p = trail_[--index];
    } while (!seen_[var_of(p)]);
    have_p = true;
    ci = reason_[var_of(p)];
    seen_[var_of(p)] = 0;
    --pending;
  } while (pending > 0);
  learnt[0] = p ^ 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) seen_[var_of(learnt[k])] = 0;

  backjump = 0;
  if (learnt.size() > 1) {
    std::size_t max_i = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k) {
      if (level_[var_of(learnt[k])] > level_[var_of(learnt[max_i])]) max_i = k;
    }
    std::swap(learnt[1], learnt[max_i]);
    backjump = level_[var_of(learnt[1])];
  }
  var_inc_ /= kVarDecay;
}

void SatSolver::backtrack(int level) {
  if (static_cast<int>(trail_lim_.size()) <= level) return;
  for (std::size_t i = trail_.size(); i > trail_lim_[static_cast<std::size_t>(level)]; --i) {
    const auto v = var_of(trail_[i - 1]);
    phase_[v] = sign_of(trail_[i - 1]) ? 1 : 0;
    assign_[v] = -1;
    reason_[v] = -1;
    heap_insert(v);
  }
  trail_.resize(trail_lim_[static_cast<std::size_t>(level)]);
  trail_lim_.resize(static_cast<std::size_t>(level));
  qhead_ = trail_.size();
}

int SatSolver::pick_branch() {
  while (!heap_.empty()) {
    const auto v = heap_pop();
    if (assign_[v] < 0) return static_cast<int>(v);
  }
  return -1;
}

bool SatSolver::solve() {
  if (unsat_) return false;
  backtrack(0);
  if (propagate() >= 0) {
    unsat_ = true;
    return false;
  }
  std::vector<Lit> learnt;
  for (int restart = 0;; ++restart) {
    const auto budget = static_cast<std::uint64_t>(luby(2.0, restart) * kRestartUnit);
    std::uint64_t local = 0;
    for (;;) {
      const int conflict = propagate();
      if (conflict >= 0) {
        ++conflicts_;
        ++local;
        if (trail_lim_.empty()) {
          unsat_ = true;
          return false;
        }
        int backjump = 0;
        analyze(conflict, learnt, backjump);
        backtrack(backjump);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          clauses_.push_back(learnt);
          const int ci = static_cast<int>(clauses_.size()) - 1;
          attach(ci);
          enqueue(learnt[0], ci);
        }
        continue;
      }
      if (local >= budget) {
        backtrack(0);
        break;
      }
      const int v = pick_branch();
      if (v < 0) return true;
      trail_lim_.push_back(trail_.size());
      enqueue(2 * static_cast<Lit>(v) + static_cast<Lit>(phase_[static_cast<std::size_t>(v)]), -1);
    }
  }
}

void SatSolver::heap_insert(std::uint32_t v) {
  if (heap_pos_[v] >= 0) return;
  heap_pos_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_.size() - 1);
}

// Max-heap on activity; ties go to the lower variable index.
static bool before(const std::vector<double>& act, std::uint32_t a, std::uint32_t b) {
  return act[a] > act[b] || (act[a] == act[b] && a < b);
}

void SatSolver::heap_up(std::size_t i) {
  const auto v = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!before(activity_, v, heap_[parent])) break;
    heap_[i] = heap_[parent];
    heap_pos_[heap_[i]] = static_cast<int>(i);
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<int>(i);
}

void SatSolver::heap_down(std::size_t i) {
  const auto v = heap_[i];
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() && before(activity_, heap_[child + 1], heap_[child])) ++child;
    if (!before(activity_, heap_[child], v)) break;
    heap_[i] = heap_[child];
    heap_pos_[heap_[i]] = static_cast<int>(i);
    i = child;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<int>(i);
}

std::uint32_t SatSolver::heap_pop() {
  const auto top = heap_[0];
  heap_pos_[top] = -1;
  const auto last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

}  // namespace monogen
