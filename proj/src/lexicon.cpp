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

#include "monogen/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "monogen/errors.hpp"

namespace monogen {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

NumberAgreement number_from_string(std::string_view s) {
  if (s == "singular") return NumberAgreement::kSingular;
  if (s == "plural") return NumberAgreement::kPlural;
  if (s == "both") return NumberAgreement::kBoth;
  throw ConfigError("unknown number agreement '" + std::string(s) + "'");
}

QuantifierSpec parse_quantifier(const std::string& entry) {
  auto open = entry.find('{');
  auto close = entry.find('}');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw ConfigError("quantifier entry needs {direction, number, semantics}: '" +
                      entry + "'");
  }
  auto attrs = split(std::string_view(entry).substr(open + 1, close - open - 1), ',');
  if (attrs.size() != 3) {
    throw ConfigError("quantifier entry needs three attributes: '" + entry + "'");
  }
  QuantifierSpec q;
  q.surface_form = trim(std::string_view(entry).substr(0, open));
  q.direction = direction_from_string(attrs[0]);
  q.number_agreement = number_from_string(attrs[1]);
  q.counting_semantics = counting_semantics_from_string(attrs[2]);
  return q;
}

void check_unique(const std::vector<std::string>& words, const char* what) {
  std::set<std::string> seen;
  for (const auto& w : words) {
    if (w.empty()) throw ConfigError(std::string("empty entry in ") + what);
    if (!seen.insert(w).second) {
      throw ConfigError(std::string("duplicate entry '") + w + "' in " + what);
    }
  }
}

}  // namespace

std::string_view to_string(Direction d) {
  return d == Direction::kUpward ? "upward" : "downward";
}

Direction direction_from_string(std::string_view s) {
  if (s == "upward" || s == "up") return Direction::kUpward;
  if (s == "downward" || s == "down") return Direction::kDownward;
  throw ConfigError("unknown direction '" + std::string(s) + "'");
}

std::string_view to_string(CountingSemantics s) {
  switch (s) {
    case CountingSemantics::kExistential: return "existential";
    case CountingSemantics::kNo: return "no";
    case CountingSemantics::kAtLeast3: return "at_least_3";
    case CountingSemantics::kAtMost3: return "at_most_3";
    case CountingSemantics::kMoreThan3: return "more_than_3";
    case CountingSemantics::kLessThan3: return "less_than_3";
    case CountingSemantics::kFew: return "few";
    case CountingSemantics::kAFew: return "a_few";
  }
  return "?";
}

CountingSemantics counting_semantics_from_string(std::string_view s) {
  for (auto c : {CountingSemantics::kExistential, CountingSemantics::kNo,
                 CountingSemantics::kAtLeast3, CountingSemantics::kAtMost3,
                 CountingSemantics::kMoreThan3, CountingSemantics::kLessThan3,
                 CountingSemantics::kFew, CountingSemantics::kAFew}) {
    if (to_string(c) == s) return c;
  }
  throw ConfigError("unknown counting semantics '" + std::string(s) + "'");
}

const Lexicon& Lexicon::standard() {
  static const Lexicon lexicon = [] {
    Lexicon l;
    using D = Direction;
    using N = NumberAgreement;
    using C = CountingSemantics;
    l.quantifiers = {
        {"no", D::kDownward, N::kBoth, C::kNo},
        {"at most three", D::kDownward, N::kPlural, C::kAtMost3},
        {"less than three", D::kDownward, N::kPlural, C::kLessThan3},
        {"few", D::kDownward, N::kPlural, C::kFew},
        {"some", D::kUpward, N::kBoth, C::kExistential},
        {"at least three", D::kUpward, N::kPlural, C::kAtLeast3},
        {"more than three", D::kUpward, N::kPlural, C::kMoreThan3},
        {"a few", D::kUpward, N::kPlural, C::kAFew},
    };
    l.nouns = {"dog", "rabbit", "lion", "cat", "bear",
               "tiger", "elephant", "fox", "monkey", "wolf"};
    l.iv1 = {"ran", "walked", "came", "waltzed", "swam",
             "rushed", "danced", "dawdled", "escaped", "left"};
    l.iv2 = {"laughed", "groaned", "roared", "screamed", "cried"};
    l.tv = {"kissed", "kicked", "hit", "cleaned", "touched",
            "loved", "accepted", "hurt", "licked", "followed"};
    l.whnps = {"that", "which"};
    l.hypernyms = {"animal", "creature", "mammal", "beast"};
    l.adjectives = {"small", "large", "crazy", "polite", "wild"};
    l.pps = {"in the area", "on the ground", "at the park", "near the shore",
             "around the island"};
    l.relcs = {"which ate dinner", "that liked flowers", "which hated the sun",
               "that stayed up late"};
    l.advs = {"slowly", "quickly", "seriously", "suddenly", "lazily"};
    for (const auto& n : l.nouns) l.hyponymy_map[n] = {0, 1, 2, 3};
    l.validate();
    return l;
  }();
  return lexicon;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lexicon file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon l;
  std::vector<std::pair<std::string, std::vector<std::string>>> hyponym_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto arrow = t.find("->");
    if (arrow == std::string::npos) {
      throw ConfigError("lexicon line " + std::to_string(line_no) + ": missing '->'");
    }
    std::string key = trim(std::string_view(t).substr(0, arrow));
    auto items = split(std::string_view(t).substr(arrow + 2), '|');
    if (key == "Q") {
      for (const auto& item : items) l.quantifiers.push_back(parse_quantifier(item));
    } else if (key.rfind("hyponym", 0) == 0) {
      hyponym_lines.emplace_back(trim(std::string_view(key).substr(7)), items);
    } else {
      std::vector<std::string>* slot = nullptr;
      if (key == "N") slot = &l.nouns;
      else if (key == "IV1") slot = &l.iv1;
      else if (key == "IV2") slot = &l.iv2;
      else if (key == "TV") slot = &l.tv;
      else if (key == "WhNP") slot = &l.whnps;
      else if (key == "N_hypn") slot = &l.hypernyms;
      else if (key == "Adj") slot = &l.adjectives;
      else if (key == "PP") slot = &l.pps;
      else if (key == "RelC") slot = &l.relcs;
      else if (key == "Adv") slot = &l.advs;
      if (slot == nullptr) {
        throw ConfigError("lexicon line " + std::to_string(line_no) +
                          ": unknown category '" + key + "'");
      }
      slot->insert(slot->end(), items.begin(), items.end());
    }
  }
  for (const auto& [noun, hypers] : hyponym_lines) {
    std::vector<std::uint8_t> idx;
    for (const auto& h : hypers) {
      auto i = l.index_of(l.hypernyms, h);
      if (!i) throw ConfigError("hypernym '" + h + "' is not listed under N_hypn");
      idx.push_back(*i);
    }
    if (noun == "*") {
      for (const auto& n : l.nouns) l.hyponymy_map[n] = idx;
    } else {
      l.hyponymy_map[noun] = idx;
    }
  }
  l.validate();
  return l;
}

void Lexicon::validate() const {
  if (quantifiers.empty()) throw ConfigError("lexicon has no quantifiers");
  std::set<std::string> qs;
  for (const auto& q : quantifiers) {
    if (!qs.insert(q.surface_form).second) {
      throw ConfigError("duplicate quantifier '" + q.surface_form + "'");
    }
  }
  check_unique(nouns, "N");
  check_unique(iv1, "IV1");
  check_unique(iv2, "IV2");
  check_unique(tv, "TV");
  check_unique(whnps, "WhNP");
  check_unique(hypernyms, "N_hypn");
  check_unique(adjectives, "Adj");
  check_unique(pps, "PP");
  check_unique(relcs, "RelC");
  check_unique(advs, "Adv");
  if (nouns.empty() || iv1.empty() || tv.empty() || whnps.empty()) {
    throw ConfigError("lexicon needs N, IV1, TV and WhNP entries");
  }
  // Entries are addressed by 8-bit indices inside sentence trees.
  for (const auto* words : {&nouns, &iv1, &iv2, &tv, &hypernyms, &adjectives, &pps,
                            &relcs, &advs, &whnps}) {
    if (words->size() > 127) throw ConfigError("lexicon category exceeds 127 entries");
  }
  if (quantifiers.size() > 127) throw ConfigError("too many quantifiers");
  for (const auto& n : nouns) {
    auto it = hyponymy_map.find(n);
    if (it == hyponymy_map.end() || it->second.empty()) {
      throw ConfigError("noun '" + n + "' has no hypernym");
    }
    for (auto h : it->second) {
      if (h >= hypernyms.size()) throw ConfigError("hypernym index out of range");
    }
  }
  // Content words must be unambiguous across categories for parsing.
  std::set<std::string> seen;
  for (const auto* words : {&nouns, &iv1, &iv2, &tv, &hypernyms, &adjectives, &advs}) {
    for (const auto& w : *words) {
      if (!seen.insert(w).second) {
        throw ConfigError("word '" + w + "' appears in more than one category");
      }
    }
  }
}

std::optional<std::uint8_t> Lexicon::quantifier_index(std::string_view surface) const {
  for (std::size_t i = 0; i < quantifiers.size(); ++i) {
    if (quantifiers[i].surface_form == surface) return static_cast<std::uint8_t>(i);
  }
  return std::nullopt;
}

std::optional<std::uint8_t> Lexicon::index_of(const std::vector<std::string>& words,
                                              std::string_view word) const {
  auto it = std::find(words.begin(), words.end(), word);
  if (it == words.end()) return std::nullopt;
  return static_cast<std::uint8_t>(it - words.begin());
}

std::string pluralize(std::string_view noun) {
  std::string n(noun);
  if (n.empty()) return n;
  auto ends_with = [&](std::string_view suffix) {
    return n.size() >= suffix.size() &&
           n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with("f")) return n.substr(0, n.size() - 1) + "ves";
  if (ends_with("s") || ends_with("x") || ends_with("ch") || ends_with("sh")) {
    return n + "es";
  }
  if (n.size() >= 2 && n.back() == 'y' &&
      std::string_view("aeiou").find(n[n.size() - 2]) == std::string_view::npos) {
    return n.substr(0, n.size() - 1) + "ies";
  }
  return n + "s";
}

std::string symbolize(std::string_view phrase) {
  std::string out;
  out.reserve(phrase.size());
  for (char c : phrase) {
    if (c == ' ' || c == '-') {
      out.push_back('_');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

}  // namespace monogen
