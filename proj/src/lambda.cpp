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

#include "monogen/lambda.hpp"

#include <atomic>

namespace monogen {
namespace {

using K = LambdaTerm::Kind;

Term make(K kind, std::string name, std::vector<Term> args) {
  return std::make_shared<const LambdaTerm>(LambdaTerm{kind, std::move(name), std::move(args)});
}

bool is_binder(K k) { return k == K::kAbs || k == K::kExists || k == K::kForall; }

std::string fresh_name(const std::string& base) {
  static std::atomic<std::uint64_t> counter{0};
  auto stem = base.substr(0, base.find('\''));
  return stem + "'" + std::to_string(counter.fetch_add(1));
}

void collect_free(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (t->kind == K::kVar) {
    if (!bound.count(t->name)) out.insert(t->name);
    return;
  }
  if (is_binder(t->kind)) {
    const bool fresh = bound.insert(t->name).second;
    collect_free(t->args[0], bound, out);
    if (fresh) bound.erase(t->name);
    return;
  }
  for (const auto& a : t->args) collect_free(a, bound, out);
}

}  // namespace

Term var(std::string name) { return make(K::kVar, std::move(name), {}); }
Term abs(std::string name, Term body) { return make(K::kAbs, std::move(name), {std::move(body)}); }
Term app(Term f, Term a) { return make(K::kApp, "", {std::move(f), std::move(a)}); }
Term app(Term f, Term a, Term b) { return app(app(std::move(f), std::move(a)), std::move(b)); }
Term atom(std::string predicate, std::vector<Term> args) {
  return make(K::kAtom, std::move(predicate), std::move(args));
}
Term eq(Term a, Term b) { return make(K::kEq, "", {std::move(a), std::move(b)}); }
Term neg(Term t) { return make(K::kNot, "", {std::move(t)}); }
Term conj(std::vector<Term> parts) {
  if (parts.size() == 1) return parts[0];
  return make(K::kAnd, "", std::move(parts));
}
Term disj(std::vector<Term> parts) {
  if (parts.size() == 1) return parts[0];
  return make(K::kOr, "", std::move(parts));
}
Term implies(Term a, Term b) { return make(K::kImplies, "", {std::move(a), std::move(b)}); }
Term exists(std::string name, Term body) {
  return make(K::kExists, std::move(name), {std::move(body)});
}
Term forall(std::string name, Term body) {
  return make(K::kForall, std::move(name), {std::move(body)});
}

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

Term substitute(const Term& t, const std::string& x, const Term& s) {
  switch (t->kind) {
    case K::kVar:
      return t->name == x ? s : t;
    case K::kAbs:
    case K::kExists:
    case K::kForall: {
      if (t->name == x) return t;
      const auto& body = t->args[0];
      if (!free_variables(body).count(x)) return t;
      if (free_variables(s).count(t->name)) {
        auto renamed = fresh_name(t->name);
        auto new_body = substitute(body, t->name, var(renamed));
        return make(t->kind, renamed, {substitute(new_body, x, s)});
      }
      return make(t->kind, t->name, {substitute(body, x, s)});
    }
    default: {
      std::vector<Term> args;
      args.reserve(t->args.size());
      bool changed = false;
      for (const auto& a : t->args) {
        args.push_back(substitute(a, x, s));
        changed = changed || args.back() != a;
      }
      return changed ? make(t->kind, t->name, std::move(args)) : t;
    }
  }
}

Term beta_normalize(const Term& t) {
  switch (t->kind) {
    case K::kVar:
      return t;
    case K::kApp: {
      auto f = beta_normalize(t->args[0]);
      if (f->kind == K::kAbs) {
        return beta_normalize(substitute(f->args[0], f->name, t->args[1]));
      }
      return app(f, beta_normalize(t->args[1]));
    }
    default: {
      std::vector<Term> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(beta_normalize(a));
      return make(t->kind, t->name, std::move(args));
    }
  }
}

bool is_beta_normal(const Term& t) {
  if (t->kind == K::kApp && t->args[0]->kind == K::kAbs) return false;
  for (const auto& a : t->args) {
    if (!is_beta_normal(a)) return false;
  }
  return true;
}

std::string to_string(const Term& t) {
  auto join = [&](const char* sep) {
    std::string s = "(";
    for (std::size_t i = 0; i < t->args.size(); ++i) {
      if (i) s += sep;
      s += to_string(t->args[i]);
    }
    return s + ")";
  };
  switch (t->kind) {
    case K::kVar: return t->name;
    case K::kAbs: return "λ" + t->name + "." + to_string(t->args[0]);
    case K::kApp: return to_string(t->args[0]) + "(" + to_string(t->args[1]) + ")";
    case K::kAtom: {
      std::string s = t->name + "(";
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) s += ",";
        s += to_string(t->args[i]);
      }
      return s + ")";
    }
    case K::kEq: return to_string(t->args[0]) + "=" + to_string(t->args[1]);
    case K::kNot: return "¬" + to_string(t->args[0]);
    case K::kAnd: return join(" ∧ ");
    case K::kOr: return join(" ∨ ");
    case K::kImplies: return join(" → ");
    case K::kExists: return "∃" + t->name + "." + to_string(t->args[0]);
    case K::kForall: return "∀" + t->name + "." + to_string(t->args[0]);
  }
  return "?";
}

}  // namespace monogen
