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

#include "monogen/tptp.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace monogen {

std::string tptp_variable(int level) {
  static const char* kNames[] = {"X", "Y", "Z", "W", "V", "U"};
  if (level >= 0 && level < 6) return kNames[level];
  return "X" + std::to_string(level);
}

namespace {

using K = Formula::Kind;

bool is_binary(const Formula& f) {
  return (f.kind == K::kAnd || f.kind == K::kOr) ? f.children.size() > 1 : f.kind == K::kImplies;
}

std::string unitary(const Formula& f) {
  const std::string s = to_tptp(f);
  return is_binary(f) ? "(" + s + ")" : s;
}

}  // namespace

std::string to_tptp(const Formula& f) {
  switch (f.kind) {
    case K::kAtom: {
      std::string s = f.predicate + "(";
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) s += ",";
        s += tptp_variable(f.args[i]);
      }
      return s + ")";
    }
    case K::kEq:
      return tptp_variable(f.args[0]) + " = " + tptp_variable(f.args[1]);
    case K::kNot: {
      const Formula& c = f.children[0];
      if (c.kind == K::kEq) return tptp_variable(c.args[0]) + " != " + tptp_variable(c.args[1]);
      return "~ " + unitary(c);
    }
    case K::kAnd:
    case K::kOr: {
      const char* op = f.kind == K::kAnd ? " & " : " | ";
      std::string s;
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) s += op;
        s += unitary(f.children[i]);
      }
      return s;
    }
    case K::kImplies:
      return unitary(f.children[0]) + " => " + unitary(f.children[1]);
    case K::kExists:
    case K::kForall: {
      // Consecutive binders of one kind share a variable list.
      std::string vars;
      const Formula* body = &f;
      while (body->kind == f.kind) {
        if (!vars.empty()) vars += ",";
        vars += tptp_variable(body->binder);
        body = &body->children[0];
      }
      return std::string(f.kind == K::kExists ? "?" : "!") + " [" + vars + "] : " + unitary(*body);
    }
  }
  return "$false";
}

std::string export_tptp(const InferencePair& pair, const Lexicon& lexicon) {
  const SentenceTree p = parse_sentence(pair.premise, lexicon);
  const SentenceTree h = parse_sentence(pair.hypothesis, lexicon);
  std::string out;
  out += "% id: " + pair.id + "\n";
  out += "% premise: " + pair.premise + "\n";
  out += "% hypothesis: " + pair.hypothesis + "\n";
  out += "% label: " + std::string(to_string(pair.label)) + "\n";
  for (const auto& a : hyponymy_axioms({&p, &h})) {
    const auto& imp = a.children[0];
    out += "fof(hyponymy_" + imp.children[0].predicate + "_" + imp.children[1].predicate +
           ", axiom, " + to_tptp(a) + ").\n";
  }
  out += "fof(premise, axiom, " + to_tptp(translate(p)) + ").\n";
  out += "fof(hypothesis, conjecture, " + to_tptp(translate(h)) + ").\n";
  return out;
}

namespace {

struct Token {
  enum class Type { kLower, kUpper, kDollar, kInteger, kQuoted, kPunct, kEnd };
  Type type;
  std::string text;
  int line;
  int column;
};

struct SyntaxError {
  int line;
  int column;
  std::string message;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < s.size(); ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  static const char* kPuncts[] = {"<~>", "<=>", "=>", "<=", "!=", "~|", "~&", "(", ")", "[",
                                  "]",   ",",   ".",  ":",  "!",  "?",  "~",  "&", "|", "="};
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      const auto end = s.find("*/", i + 2);
      if (end == std::string_view::npos) throw SyntaxError{line, col, "unterminated comment"};
      advance(end + 2 - i);
      continue;
    }
    Token t{Token::Type::kEnd, "", line, col};
    std::size_t start = i;
    if (std::islower(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c)) ||
        c == '$') {
      std::size_t j = i + 1;
      while (j < s.size() && alnum(s[j])) ++j;
      t.type = c == '$'                                       ? Token::Type::kDollar
               : std::isupper(static_cast<unsigned char>(c)) ? Token::Type::kUpper
                                                              : Token::Type::kLower;
      t.text = std::string(s.substr(start, j - start));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.type = Token::Type::kInteger;
      t.text = std::string(s.substr(start, j - start));
      advance(j - i);
    } else if (c == '\'') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '\'') {
        if (s[j] == '\\') ++j;
        ++j;
      }
      if (j >= s.size()) throw SyntaxError{line, col, "unterminated quoted atom"};
      t.type = Token::Type::kQuoted;
      t.text = std::string(s.substr(start, j + 1 - start));
      advance(j + 1 - i);
    } else {
      bool found = false;
      for (const char* p : kPuncts) {
        const std::string_view ps(p);
        if (s.substr(i, ps.size()) == ps) {
          t.type = Token::Type::kPunct;
          t.text = std::string(ps);
          advance(ps.size());
          found = true;
          break;
        }
      }
      if (!found) throw SyntaxError{line, col, std::string("unexpected character '") + c + "'"};
    }
    out.push_back(std::move(t));
  }
  out.push_back({Token::Type::kEnd, "", line, col});
  return out;
}

class Checker {
 public:
  explicit Checker(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  void file() {
    while (peek().type != Token::Type::kEnd) annotated();
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool is(std::string_view punct) const {
    return peek().type == Token::Type::kPunct && peek().text == punct;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError{peek().line, peek().column, msg};
  }
  void expect(std::string_view punct) {
    if (!is(punct)) fail("expected '" + std::string(punct) + "' but found '" + peek().text + "'");
    ++pos_;
  }

  void annotated() {
    if (peek().type != Token::Type::kLower || peek().text != "fof") {
      fail("expected 'fof' but found '" + peek().text + "'");
    }
    ++pos_;
    expect("(");
    const Token& name = peek();
    if (name.type != Token::Type::kLower && name.type != Token::Type::kInteger &&
        name.type != Token::Type::kQuoted) {
      fail("bad formula name '" + name.text + "'");
    }
    if (!names_.insert(name.text).second) fail("duplicate formula name '" + name.text + "'");
    ++pos_;
    expect(",");
    static const std::set<std::string> kRoles = {
        "axiom",    "hypothesis",        "definition", "assumption", "lemma",
        "theorem",  "corollary",         "conjecture", "negated_conjecture",
        "plain",    "fi_domain",         "fi_functors", "fi_predicates", "unknown"};
    if (peek().type != Token::Type::kLower || !kRoles.count(peek().text)) {
      fail("unknown role '" + peek().text + "'");
    }
    ++pos_;
    expect(",");
    bound_.clear();
    logic_formula();
    if (is(",")) fail("annotations are not supported");
    expect(")");
    expect(".");
  }

  void logic_formula() {
    unit_formula();
    static const std::set<std::string> kNonAssoc = {"<=>", "=>", "<=", "<~>", "~|", "~&"};
    if (peek().type == Token::Type::kPunct && kNonAssoc.count(peek().text)) {
      ++pos_;
      unit_formula();
      return;
    }
    if (is("&") || is("|")) {
      const std::string op = peek().text;
      while (is(op)) {
        ++pos_;
        unit_formula();
      }
      if (is("&") || is("|")) fail("mixed '&' and '|' need parentheses");
    }
  }

  void unit_formula() {
    if (is("~")) {
      ++pos_;
      unit_formula();
      return;
    }
    if (is("!") || is("?")) {
      ++pos_;
      expect("[");
      std::vector<std::string> vars;
      for (;;) {
        if (peek().type != Token::Type::kUpper) fail("expected variable in quantifier list");
        vars.push_back(peek().text);
        ++pos_;
        if (!is(",")) break;
        ++pos_;
      }
      expect("]");
      expect(":");
      for (const auto& v : vars) bound_.push_back(v);
      unit_formula();
      bound_.resize(bound_.size() - vars.size());
      return;
    }
    if (is("(")) {
      ++pos_;
      logic_formula();
      expect(")");
      return;
    }
    atomic();
  }

  void atomic() {
    const Token& t = peek();
    if (t.type == Token::Type::kDollar && (t.text == "$true" || t.text == "$false")) {
      ++pos_;
      return;
    }
    const bool starts_term = t.type == Token::Type::kLower || t.type == Token::Type::kUpper ||
                             t.type == Token::Type::kQuoted || t.type == Token::Type::kInteger;
    if (!starts_term) fail("expected formula but found '" + t.text + "'");
    const bool variable = t.type == Token::Type::kUpper;
    const std::string symbol = t.text;
    const int arity = term();
    if (is("=") || is("!=")) {
      if (!variable) arity_check("functor", symbol, arity);
      ++pos_;
      term();
      return;
    }
    if (variable) fail("variable '" + symbol + "' used as a formula");
    arity_check("predicate", symbol, arity);
  }

  // Returns the number of arguments.
  int term() {
    const Token t = peek();
    ++pos_;
    if (t.type == Token::Type::kUpper) {
      bool found = false;
      for (const auto& b : bound_) found = found || b == t.text;
      if (!found) throw SyntaxError{t.line, t.column, "unbound variable '" + t.text + "'"};
      return 0;
    }
    if (t.type != Token::Type::kLower && t.type != Token::Type::kQuoted &&
        t.type != Token::Type::kInteger) {
      throw SyntaxError{t.line, t.column, "expected term but found '" + t.text + "'"};
    }
    int arity = 0;
    if (is("(")) {
      ++pos_;
      for (;;) {
        const std::string sub = peek().text;
        const bool sub_var = peek().type == Token::Type::kUpper;
        const int a = term();
        if (!sub_var) arity_check("functor", sub, a);
        ++arity;
        if (!is(",")) break;
        ++pos_;
      }
      expect(")");
    }
    return arity;
  }

  void arity_check(const char* kind, const std::string& symbol, int arity) {
    auto& table = kind[0] == 'p' ? predicates_ : functors_;
    auto [it, inserted] = table.emplace(symbol, arity);
    if (!inserted && it->second != arity) {
      fail(std::string(kind) + " '" + symbol + "' used with arities " +
           std::to_string(it->second) + " and " + std::to_string(arity));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
  std::set<std::string> names_;
  std::map<std::string, int> predicates_;
  std::map<std::string, int> functors_;
};

}  // namespace

TptpDiagnostic check_tptp_syntax(std::string_view text) {
  TptpDiagnostic d;
  try {
    Checker c(lex(text));
    c.file();
  } catch (const SyntaxError& e) {
    d.ok = false;
    d.line = e.line;
    d.column = e.column;
    d.message = e.message;
  }
  return d;
}

}  // namespace monogen
