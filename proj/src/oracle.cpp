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

#include "monogen/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "monogen/errors.hpp"
#include "monogen/sat.hpp"

namespace monogen {
namespace {

using K = Formula::Kind;

bool eval(const Formula& f, const FiniteModel& m, std::vector<int>& env) {
  switch (f.kind) {
    case K::kAtom: {
      auto it = m.extensions.find(f.predicate);
      if (it == m.extensions.end()) return false;
      std::vector<int> tuple;
      for (int a : f.args) tuple.push_back(env[static_cast<std::size_t>(a)]);
      return it->second.count(tuple) > 0;
    }
    case K::kEq:
      return env[static_cast<std::size_t>(f.args[0])] == env[static_cast<std::size_t>(f.args[1])];
    case K::kNot:
      return !eval(f.children[0], m, env);
    case K::kAnd:
      for (const auto& c : f.children) {
        if (!eval(c, m, env)) return false;
      }
      return true;
    case K::kOr:
      for (const auto& c : f.children) {
        if (eval(c, m, env)) return true;
      }
      return false;
    case K::kImplies:
      return !eval(f.children[0], m, env) || eval(f.children[1], m, env);
    case K::kExists:
    case K::kForall: {
      const bool want = f.kind == K::kExists;
      env.resize(static_cast<std::size_t>(f.binder) + 1);
      for (int e = 0; e < m.domain_size; ++e) {
        env[static_cast<std::size_t>(f.binder)] = e;
        if (eval(f.children[0], m, env) == want) return want;
      }
      return !want;
    }
  }
  return false;
}

// Levels of variables occurring free in f.
void free_levels(const Formula& f, std::vector<int>& out) {
  for (int a : f.args) out.push_back(a);
  for (const auto& c : f.children) free_levels(c, out);
}

struct MemoKey {
  int shape;
  std::vector<int> values;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.shape);
    for (int v : k.values) h = h * 1000003u + static_cast<std::size_t>(v) + 1;
    return h;
  }
};

// Serializes f; `name` renders a variable level that is not bound inside f.
template <typename Name>
void shape_of(const Formula& f, int depth, const Name& name, std::string& out) {
  out += static_cast<char>('a' + static_cast<int>(f.kind));
  out += f.predicate;
  for (int a : f.args) out += a < depth ? name(a) : "B" + std::to_string(a - depth);
  if (f.binder >= 0) out += "B" + std::to_string(f.binder - depth);
  out += '(';
  const int inner = f.binder >= 0 ? depth + 1 : depth;
  for (const auto& c : f.children) shape_of(c, inner, name, out);
  out += ')';
}

bool is_disequality(const Formula& f) {
  return f.kind == K::kNot && f.children[0].kind == K::kEq;
}

// Recognizes ∃x1..∃xk(⋀ xi≠xj ∧ ⋀ B(xi)) with the same body B for every
// witness. Such a formula holds iff some increasing tuple of witnesses does.
struct CountingShape {
  int k = 0;
  const Formula* body = nullptr;                  // the And under the binders
  std::vector<const Formula*> conjuncts;          // non-disequality children
};

std::optional<CountingShape> counting_shape(const Formula& f, int depth) {
  CountingShape c;
  const Formula* b = &f;
  while (b->kind == K::kExists) {
    ++c.k;
    b = &b->children[0];
  }
  if (c.k < 2 || b->kind != K::kAnd) return std::nullopt;
  const int lo = depth, hi = depth + c.k;
  std::set<std::pair<int, int>> pairs;
  std::vector<std::vector<const Formula*>> groups(static_cast<std::size_t>(c.k));
  for (const auto& child : b->children) {
    if (is_disequality(child)) {
      const auto& e = child.children[0];
      int a = e.args[0], d = e.args[1];
      if (a >= lo && a < hi && d >= lo && d < hi && a != d) {
        pairs.emplace(std::min(a, d), std::max(a, d));
        continue;
      }
    }
    std::vector<int> levels;
    free_levels(child, levels);
    int owner = -1;
    for (int l : levels) {
      if (l < lo || l >= hi) continue;
      if (owner >= 0 && owner != l) return std::nullopt;
      owner = l;
    }
    if (owner < 0) return std::nullopt;
    groups[static_cast<std::size_t>(owner - lo)].push_back(&child);
    c.conjuncts.push_back(&child);
  }
  if (pairs.size() != static_cast<std::size_t>(c.k * (c.k - 1) / 2)) return std::nullopt;
  std::string first;
  for (int i = 0; i < c.k; ++i) {
    std::string text;
    auto name = [&](int l) {
      if (l == lo + i) return std::string("V");
      return "O" + std::to_string(l);
    };
    for (const auto* g : groups[static_cast<std::size_t>(i)]) shape_of(*g, hi, name, text);
    if (i == 0) {
      first = std::move(text);
    } else if (text != first) {
      return std::nullopt;
    }
  }
  c.body = b;
  return c;
}

// Tseitin encoding of formulas grounded over a fixed domain. Literal kTrue
// is a variable forced true; equalities fold to constants.
class Grounder {
 public:
  Grounder(SatSolver& solver, int domain, const Signature& sig) : s_(solver), n_(domain) {
    t_ = s_.new_var();
    s_.add_clause({t_});
    for (const auto& [pred, arity] : sig) {
      int count = 1;
      for (int i = 0; i < arity; ++i) count *= n_;
      base_[pred] = s_.num_vars() + 1;
      for (int i = 0; i < count; ++i) s_.new_var();
    }
  }

  int encode(const Formula& f) {
    std::vector<int> env;
    return encode(f, env, 0);
  }

  int atom_var(const std::string& pred, const std::vector<int>& tuple) const {
    int index = 0;
    for (int v : tuple) index = index * n_ + v;
    return base_.at(pred) + index;
  }

 private:
  // `depth` is the number of enclosing binders.
  int encode(const Formula& f, std::vector<int>& env, int depth) {
    switch (f.kind) {
      case K::kAtom: {
        std::vector<int> tuple;
        for (int a : f.args) tuple.push_back(env[static_cast<std::size_t>(a)]);
        return atom_var(f.predicate, tuple);
      }
      case K::kEq:
        return env[static_cast<std::size_t>(f.args[0])] == env[static_cast<std::size_t>(f.args[1])]
                   ? t_
                   : -t_;
      case K::kNot:
        return -encode(f.children[0], env, depth);
      default:
        break;
    }
    const NodeInfo& node = info(f, depth);
    MemoKey key{node.shape, {}};
    for (int level : node.free) key.values.push_back(env[static_cast<std::size_t>(level)]);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<int> lits;
    bool conjunctive = true;
    switch (f.kind) {
      case K::kAnd:
      case K::kOr:
        conjunctive = f.kind == K::kAnd;
        for (const auto& c : f.children) lits.push_back(encode(c, env, depth));
        break;
      case K::kImplies:
        conjunctive = false;
        lits.push_back(-encode(f.children[0], env, depth));
        lits.push_back(encode(f.children[1], env, depth));
        break;
      case K::kExists:
        if (auto c = counting(f, depth)) {
          conjunctive = false;
          witnesses(*c, depth, env, lits);
          break;
        }
        [[fallthrough]];
      case K::kForall: {
        conjunctive = f.kind == K::kForall;
        const auto slot = static_cast<std::size_t>(f.binder);
        if (env.size() <= slot) env.resize(slot + 1);
        for (int e = 0; e < n_; ++e) {
          env[slot] = e;
          lits.push_back(encode(f.children[0], env, depth + 1));
        }
        break;
      }
      default:
        break;
    }
    const int lit = gate(conjunctive, lits);
    memo_.emplace(std::move(key), lit);
    return lit;
  }

  const std::optional<CountingShape>& counting(const Formula& f, int depth) {
    auto it = counting_.find(&f);
    if (it != counting_.end()) return it->second;
    return counting_.emplace(&f, counting_shape(f, depth)).first->second;
  }

  // One conjunction per increasing witness tuple e1 < ... < ek.
  void witnesses(const CountingShape& c, int depth, std::vector<int>& env,
                 std::vector<int>& out) {
    const auto k = static_cast<std::size_t>(c.k);
    if (env.size() < static_cast<std::size_t>(depth) + k) env.resize(static_cast<std::size_t>(depth) + k);
    std::vector<int> tuple(k);
    for (std::size_t i = 0; i < k; ++i) tuple[i] = static_cast<int>(i);
    if (static_cast<int>(k) > n_) return;
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) env[static_cast<std::size_t>(depth) + i] = tuple[i];
      std::vector<int> parts;
      for (const auto* conj : c.conjuncts) parts.push_back(encode(*conj, env, depth + c.k));
      out.push_back(gate(true, parts));
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && tuple[i - 1] == n_ - static_cast<int>(k - i) - 1) --i;
      if (i == 0) return;
      ++tuple[i - 1];
      for (std::size_t j = i; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
    }
  }

  // Literal equivalent to the conjunction (or disjunction) of `lits`.
  int gate(bool conjunctive, const std::vector<int>& lits) {
    const int absorbing = conjunctive ? -t_ : t_;
    const int neutral = -absorbing;
    std::vector<int> kept;
    for (int l : lits) {
      if (l == absorbing) return absorbing;
      if (l != neutral) kept.push_back(l);
    }
    if (kept.empty()) return neutral;
    if (kept.size() == 1) return kept[0];
    // A disjunction g ↔ ∨l is the dual of ¬g ↔ ∧¬l.
    const int sign = conjunctive ? 1 : -1;
    const int g = s_.new_var();
    std::vector<int> big{sign * g};
    for (int l : kept) {
      s_.add_clause({-sign * g, sign * l});
      big.push_back(-sign * l);
    }
    s_.add_clause(std::move(big));
    return g;
  }

  struct NodeInfo {
    int shape;
    std::vector<int> free;  // referenced levels below the node's depth
  };

  const NodeInfo& info(const Formula& f, int depth) {
    auto it = info_.find(&f);
    if (it != info_.end()) return it->second;
    std::vector<int> levels;
    free_levels(f, levels);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    levels.erase(std::remove_if(levels.begin(), levels.end(), [&](int l) { return l >= depth; }),
                 levels.end());
    std::string text;
    auto name = [&](int l) {
      return "F" + std::to_string(std::lower_bound(levels.begin(), levels.end(), l) - levels.begin());
    };
    shape_of(f, depth, name, text);
    const int shape = shapes_.emplace(std::move(text), static_cast<int>(shapes_.size())).first->second;
    return info_.emplace(&f, NodeInfo{shape, std::move(levels)}).first->second;
  }

  SatSolver& s_;
  int n_;
  int t_ = 0;
  std::map<std::string, int> base_;
  std::unordered_map<MemoKey, int, MemoHash> memo_;
  std::unordered_map<const Formula*, NodeInfo> info_;
  std::unordered_map<std::string, int> shapes_;
  std::unordered_map<const Formula*, std::optional<CountingShape>> counting_;
};

}  // namespace

bool evaluate(const Formula& f, const FiniteModel& model) {
  std::vector<int> env;
  return eval(f, model, env);
}

std::string to_string(const FiniteModel& model, const Signature& sig) {
  std::string out = "{";
  bool first = true;
  auto element = [](int e) { return "e" + std::to_string(e + 1); };
  for (const auto& [pred, arity] : sig) {
    int count = 1;
    for (int i = 0; i < arity; ++i) count *= model.domain_size;
    auto it = model.extensions.find(pred);
    for (int index = 0; index < count; ++index) {
      std::vector<int> tuple(static_cast<std::size_t>(arity));
      int rest = index;
      for (int i = arity - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = rest % model.domain_size;
        rest /= model.domain_size;
      }
      const bool in = it != model.extensions.end() && it->second.count(tuple);
      std::string name = arity == 1 ? element(tuple[0]) : "(";
      if (arity != 1) {
        for (int i = 0; i < arity; ++i) {
          if (i) name += ",";
          name += element(tuple[static_cast<std::size_t>(i)]);
        }
        name += ")";
      }
      if (!first) out += ", ";
      first = false;
      out += name + (in ? " ∈ " : " ∉ ") + pred;
    }
  }
  return out + "}";
}

std::string_view to_string(Verdict v) {
  return v == Verdict::kEntailed ? "entailed" : "countermodel_found";
}

Label oracle_label(Verdict v) {
  return v == Verdict::kEntailed ? Label::kEntailment : Label::kNonEntailment;
}

EntailmentResult check_entailment_finite(const Formula& premise, const Formula& hypothesis,
                                         const std::vector<Formula>& axioms, int max_domain) {
  if (max_domain < 4) throw ConfigError("max_domain must be at least 4");
  EntailmentResult result;
  collect_signature(premise, result.signature);
  collect_signature(hypothesis, result.signature);
  for (const auto& a : axioms) collect_signature(a, result.signature);

  for (int n = 1; n <= max_domain; ++n) {
    SatSolver solver;
    Grounder g(solver, n, result.signature);
    solver.add_clause({g.encode(premise)});
    solver.add_clause({-g.encode(hypothesis)});
    for (const auto& a : axioms) solver.add_clause({g.encode(a)});
    if (!solver.solve()) continue;

    FiniteModel model;
    model.domain_size = n;
    for (const auto& [pred, arity] : result.signature) {
      auto& ext = model.extensions[pred];
      int count = 1;
      for (int i = 0; i < arity; ++i) count *= n;
      for (int index = 0; index < count; ++index) {
        std::vector<int> tuple(static_cast<std::size_t>(arity));
        int rest = index;
        for (int i = arity - 1; i >= 0; --i) {
          tuple[static_cast<std::size_t>(i)] = rest % n;
          rest /= n;
        }
        if (solver.value(g.atom_var(pred, tuple))) ext.insert(tuple);
      }
    }
    // The model is re-checked by direct evaluation, independent of the
    // encoding.
    bool ok = evaluate(premise, model) && !evaluate(hypothesis, model);
    for (const auto& a : axioms) ok = ok && evaluate(a, model);
    if (!ok) throw std::logic_error("SAT model fails direct evaluation");
    result.verdict = Verdict::kCountermodelFound;
    result.countermodel = std::move(model);
    return result;
  }
  result.verdict = Verdict::kEntailed;
  return result;
}

EntailmentResult check_entailment_finite(const InferencePair& pair, int max_domain,
                                         const Lexicon& lexicon) {
  const SentenceTree p = parse_sentence(pair.premise, lexicon);
  const SentenceTree h = parse_sentence(pair.hypothesis, lexicon);
  return check_entailment_finite(translate(p), translate(h), hyponymy_axioms({&p, &h}),
                                 max_domain);
}

namespace {

VerificationResult verify_one(const InferencePair& pair, int max_domain, const Lexicon& lexicon) {
  VerificationResult r;
  r.id = pair.id;
  r.expected = pair.label;
  try {
    r.verdict = check_entailment_finite(pair, max_domain, lexicon).verdict;
    r.agrees = oracle_label(r.verdict) == pair.label;
  } catch (const TranslationError& e) {
    r.error = e.what();
  } catch (const ParseError& e) {
    r.error = e.what();
  } catch (const std::exception& e) {
    r.error = std::string("internal: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<VerificationResult> verify_pairs(const std::vector<InferencePair>& pairs,
                                             int max_domain, ExecutionPolicy policy,
                                             const Lexicon& lexicon) {
  if (max_domain < 4) throw ConfigError("max_domain must be at least 4");
  std::vector<VerificationResult> out(pairs.size());
  const auto n = static_cast<long long>(pairs.size());
  if (policy == ExecutionPolicy::kSerial) {
    for (long long i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] =
          verify_one(pairs[static_cast<std::size_t>(i)], max_domain, lexicon);
    }
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        verify_one(pairs[static_cast<std::size_t>(i)], max_domain, lexicon);
  }
  return out;
}

VerificationSummary summarize(const std::vector<VerificationResult>& results) {
  VerificationSummary s;
  for (const auto& r : results) {
    ++s.checked;
    if (!r.error.empty()) {
      ++s.errors;
    } else if (!r.agrees) {
      ++s.mismatches;
    }
  }
  return s;
}

}  // namespace monogen
