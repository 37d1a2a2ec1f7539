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

#include "monogen/formula.hpp"

#include <algorithm>

namespace monogen {

Formula Formula::atom(std::string predicate, std::vector<int> args) {
  Formula f;
  f.kind = Kind::kAtom;
  f.predicate = std::move(predicate);
  f.args = std::move(args);
  return f;
}

Formula Formula::equal(int a, int b) {
  Formula f;
  f.kind = Kind::kEq;
  f.args = {a, b};
  return f;
}

Formula Formula::negation(Formula inner) {
  Formula f;
  f.kind = Kind::kNot;
  f.children.push_back(std::move(inner));
  return f;
}

namespace {

Formula nary(Formula::Kind kind, std::vector<Formula> parts) {
  if (parts.size() == 1) return std::move(parts[0]);
  Formula f;
  f.kind = kind;
  for (auto& p : parts) {
    // Flatten nested conjunctions/disjunctions of the same kind.
    if (p.kind == kind) {
      for (auto& c : p.children) f.children.push_back(std::move(c));
    } else {
      f.children.push_back(std::move(p));
    }
  }
  return f;
}

Formula quantified(Formula::Kind kind, int level, Formula body) {
  Formula f;
  f.kind = kind;
  f.binder = level;
  f.children.push_back(std::move(body));
  return f;
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> parts) { return nary(Kind::kAnd, std::move(parts)); }
Formula Formula::disjunction(std::vector<Formula> parts) { return nary(Kind::kOr, std::move(parts)); }

Formula Formula::implication(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::kImplies;
  f.children.push_back(std::move(a));
  f.children.push_back(std::move(b));
  return f;
}

Formula Formula::exists(int level, Formula body) {
  return quantified(Kind::kExists, level, std::move(body));
}
Formula Formula::forall(int level, Formula body) {
  return quantified(Kind::kForall, level, std::move(body));
}

void collect_signature(const Formula& f, Signature& sig) {
  if (f.kind == Formula::Kind::kAtom) {
    const int arity = static_cast<int>(f.args.size());
    auto [it, inserted] = sig.emplace(f.predicate, arity);
    if (!inserted && it->second != arity) {
      throw TranslationError("predicate '" + f.predicate + "' used with arity " +
                             std::to_string(it->second) + " and " + std::to_string(arity));
    }
  }
  for (const auto& c : f.children) collect_signature(c, sig);
}

Signature signature(const Formula& f) {
  Signature sig;
  collect_signature(f, sig);
  return sig;
}

namespace {

bool closed_under(const Formula& f, int depth) {
  for (int a : f.args) {
    if (a < 0 || a >= depth) return false;
  }
  if (f.kind == Formula::Kind::kExists || f.kind == Formula::Kind::kForall) {
    if (f.binder != depth) return false;
    return closed_under(f.children[0], depth + 1);
  }
  return std::all_of(f.children.begin(), f.children.end(),
                     [&](const Formula& c) { return closed_under(c, depth); });
}

struct Converter {
  std::vector<std::string> scope;  // binder names by level

  int level_of(const Term& t) {
    if (t->kind != LambdaTerm::Kind::kVar) {
      throw TranslationError("non-variable argument " + to_string(t));
    }
    for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i) {
      if (scope[static_cast<std::size_t>(i)] == t->name) return i;
    }
    throw TranslationError("free variable '" + t->name + "'");
  }

  std::vector<Formula> convert_all(const Term& t) {
    std::vector<Formula> out;
    for (const auto& a : t->args) out.push_back(convert(a));
    return out;
  }

  Formula convert(const Term& t) {
    using K = LambdaTerm::Kind;
    switch (t->kind) {
      case K::kAtom: {
        std::vector<int> args;
        for (const auto& a : t->args) args.push_back(level_of(a));
        return Formula::atom(t->name, std::move(args));
      }
      case K::kEq:
        return Formula::equal(level_of(t->args[0]), level_of(t->args[1]));
      case K::kNot:
        return Formula::negation(convert(t->args[0]));
      case K::kAnd:
        return Formula::conjunction(convert_all(t));
      case K::kOr:
        return Formula::disjunction(convert_all(t));
      case K::kImplies:
        return Formula::implication(convert(t->args[0]), convert(t->args[1]));
      case K::kExists:
      case K::kForall: {
        const int level = static_cast<int>(scope.size());
        scope.push_back(t->name);
        Formula body = convert(t->args[0]);
        scope.pop_back();
        return t->kind == K::kExists ? Formula::exists(level, std::move(body))
                                     : Formula::forall(level, std::move(body));
      }
      case K::kVar:
      case K::kAbs:
      case K::kApp:
        break;
    }
    throw TranslationError("term is not first-order: " + to_string(t));
  }
};

}  // namespace

bool is_closed(const Formula& f) { return closed_under(f, 0); }

Formula to_formula(const Term& t) {
  Converter c;
  Formula f = c.convert(t);
  signature(f);
  return f;
}

std::string variable_name(int level) {
  static const char* kNames[] = {"x", "y", "z", "w", "v", "u"};
  if (level >= 0 && level < 6) return kNames[level];
  return "x" + std::to_string(level);
}

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  auto join = [&](const char* sep) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.children.size(); ++i) {
      if (i) s += sep;
      s += to_string(f.children[i]);
    }
    return s + ")";
  };
  switch (f.kind) {
    case K::kAtom: {
      std::string s = f.predicate + "(";
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) s += ",";
        s += variable_name(f.args[i]);
      }
      return s + ")";
    }
    case K::kEq: return variable_name(f.args[0]) + "=" + variable_name(f.args[1]);
    case K::kNot:
      if (f.children[0].kind == K::kEq) {
        return variable_name(f.children[0].args[0]) + "≠" + variable_name(f.children[0].args[1]);
      }
      return "¬" + to_string(f.children[0]);
    case K::kAnd: return join(" ∧ ");
    case K::kOr: return join(" ∨ ");
    case K::kImplies: return join(" → ");
    case K::kExists: {
      // Nested binders print as ∃x∃y(...).
      std::string s = "∃" + variable_name(f.binder);
      std::string body = to_string(f.children[0]);
      if (body.front() != '(' && body.rfind("∃", 0) != 0) body = "(" + body + ")";
      return s + body;
    }
    case K::kForall: {
      std::string s = "∀" + variable_name(f.binder);
      std::string body = to_string(f.children[0]);
      if (body.front() != '(' && body.rfind("∀", 0) != 0) body = "(" + body + ")";
      return s + body;
    }
  }
  return "?";
}

}  // namespace monogen
