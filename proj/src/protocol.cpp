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

#include "monogen/protocol.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include <json.hpp>

#include "monogen/dataset_io.hpp"
#include "monogen/errors.hpp"
#include "monogen/grammar.hpp"
#include "monogen/polarity.hpp"
#include "monogen/rng.hpp"

namespace monogen {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<Aspect, 4> kAspects = {
    Aspect::kReplacementSystematicity, Aspect::kEmbeddingQuantifiers, Aspect::kProductivity,
    Aspect::kLocalism};

constexpr std::array<StructureVariant, 3> kVariants = {
    StructureVariant::kAdvPrefix, StructureVariant::kPpPrefix, StructureVariant::kObjectPosition};

std::vector<std::string> quantifiers_with(const Lexicon& lex, Direction d) {
  std::vector<std::string> out;
  for (const auto& q : lex.quantifiers) {
    if (q.direction == d) out.push_back(q.surface_form);
  }
  return out;
}

bool is_base(const InferencePair& p) { return p.structure_variant == StructureVariant::kBase; }

bool all_in(const std::vector<std::string>& qs, const std::set<std::string>& set) {
  return std::all_of(qs.begin(), qs.end(), [&](const std::string& q) { return set.count(q) > 0; });
}

bool none_in(const std::vector<std::string>& qs, const std::set<std::string>& set) {
  return std::none_of(qs.begin(), qs.end(), [&](const std::string& q) { return set.count(q) > 0; });
}

// "all" plus one group per direction.
void add_direction_groups(SplitPlan& plan, const std::vector<const InferencePair*>& test,
                          const std::string& prefix) {
  for (const auto* p : test) {
    plan.test_groups[prefix + std::string(to_string(p->target_polarity))].push_back(p->id);
  }
}

void finish(SplitPlan& plan, std::vector<const InferencePair*> train,
            std::vector<const InferencePair*> test, bool per_depth) {
  auto by_id = [](const InferencePair* a, const InferencePair* b) { return a->id < b->id; };
  std::sort(train.begin(), train.end(), by_id);
  std::sort(test.begin(), test.end(), by_id);
  for (const auto* p : train) plan.train_ids.push_back(p->id);
  for (const auto* p : test) {
    plan.test_ids.push_back(p->id);
    plan.held_out.depths.insert(p->depth);
    for (const auto& q : p->quantifiers) plan.held_out.quantifiers.insert(q);
  }
  plan.test_groups["all"] = plan.test_ids;
  add_direction_groups(plan, test, "");
  if (per_depth) {
    for (const auto* p : test) {
      const std::string d = "D" + std::to_string(p->depth);
      plan.test_groups[d].push_back(p->id);
      plan.test_groups[d + "/" + std::string(to_string(p->target_polarity))].push_back(p->id);
    }
  }
}

std::uint64_t run_seed(const AspectConfig& config, Aspect aspect, int run) {
  return hash_combine(hash_combine(config.seed, static_cast<std::uint64_t>(aspect) + 1),
                      static_cast<std::uint64_t>(run));
}

const char* variant_suffix(StructureVariant v) {
  switch (v) {
    case StructureVariant::kAdvPrefix: return "_adv";
    case StructureVariant::kPpPrefix: return "_pp";
    case StructureVariant::kObjectPosition: return "_obj";
    case StructureVariant::kBase: break;
  }
  return "";
}

std::vector<std::size_t> seeded_order(std::size_t n, Rng& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  rng.shuffle(idx);
  return idx;
}

}  // namespace

std::string_view to_string(Aspect a) {
  switch (a) {
    case Aspect::kReplacementSystematicity: return "replacement_systematicity";
    case Aspect::kEmbeddingQuantifiers: return "embedding_quantifiers";
    case Aspect::kProductivity: return "productivity";
    case Aspect::kLocalism: return "localism";
  }
  return "?";
}

Aspect aspect_from_string(std::string_view s) {
  for (auto a : kAspects) {
    if (to_string(a) == s) return a;
  }
  throw ConfigError("unknown aspect '" + std::string(s) + "'");
}

std::string SplitPlan::name() const {
  return std::string(to_string(aspect)) + "_run" + std::to_string(run_index) + "_step" +
         std::to_string(step_index);
}

void AspectConfig::validate() const {
  if (lexicon == nullptr) throw ConfigError("aspect config has no lexicon");
  if (num_runs < 1) throw ConfigError("num_runs must be at least 1");
  if (s < 1) throw ConfigError("s must be at least 1");
  const auto& qs = lexicon->quantifiers;
  if (std::none_of(qs.begin(), qs.end(),
                   [&](const QuantifierSpec& q) { return q.surface_form == anchor_quantifier; })) {
    throw ConfigError("anchor quantifier '" + anchor_quantifier + "' is not in the lexicon");
  }
}

std::vector<std::pair<std::string, std::string>> quantifier_sequence_for_run(
    const AspectConfig& config, int run_index, const std::set<std::string>& exclude, int length) {
  auto ups = quantifiers_with(*config.lexicon, Direction::kUpward);
  auto downs = quantifiers_with(*config.lexicon, Direction::kDownward);
  std::erase_if(ups, [&](const std::string& q) { return exclude.count(q) > 0; });
  std::erase_if(downs, [&](const std::string& q) { return exclude.count(q) > 0; });
  Rng rng(hash_combine(config.seed, 0x5e9000 + static_cast<std::uint64_t>(run_index)));
  rng.shuffle(ups);
  rng.shuffle(downs);
  const std::size_t n =
      std::min<std::size_t>({ups.size(), downs.size(), static_cast<std::size_t>(length)});
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(ups[i], downs[i]);
  return out;
}

std::vector<SplitPlan> build_replacement_systematicity(const AspectConfig& config,
                                                       const std::vector<InferencePair>& pool) {
  config.validate();
  const Lexicon& lex = *config.lexicon;
  const std::string& q = config.anchor_quantifier;
  const ReplacementId r = config.anchor_replacement;

  std::vector<const InferencePair*> d1;
  std::set<std::pair<std::string, ReplacementId>> seen;
  for (const auto& p : pool) {
    if (p.depth != 1 || !is_base(p) || p.quantifiers.size() != 1) continue;
    d1.push_back(&p);
    seen.insert({p.quantifiers[0], p.replacement});
  }
  for (const auto& spec : lex.quantifiers) {
    for (auto f : kAllReplacements) {
      if (!seen.count({spec.surface_form, f})) {
        throw CoverageError("pool has no depth-1 pair for (" + spec.surface_form + ", " +
                            std::string(to_string(f)) + ")");
      }
    }
  }

  const int n = static_cast<int>(std::min(quantifiers_with(lex, Direction::kUpward).size(),
                                          quantifiers_with(lex, Direction::kDownward).size()));
  std::vector<SplitPlan> plans;
  for (int run = 0; run < config.num_runs; ++run) {
    const auto p = quantifier_sequence_for_run(config, run, {q}, n - 1);
    std::set<std::string> trained = {q};
    for (int step = 0; step <= static_cast<int>(p.size()); ++step) {
      if (step > 0) {
        trained.insert(p[step - 1].first);
        trained.insert(p[step - 1].second);
      }
      SplitPlan plan;
      plan.aspect = Aspect::kReplacementSystematicity;
      plan.run_index = run;
      plan.step_index = step;
      plan.seed = run_seed(config, plan.aspect, run);
      plan.sequence = p;
      std::vector<const InferencePair*> train;
      std::vector<const InferencePair*> test;
      for (const auto* pair : d1) {
        if (pair->replacement == r || trained.count(pair->quantifiers[0])) {
          train.push_back(pair);
        } else {
          test.push_back(pair);
        }
      }
      finish(plan, train, test, false);
      plan.held_out.replacement = r;
      for (auto v : kVariants) {
        auto& ids = plan.variant_test_ids[v];
        for (const auto& id : plan.test_ids) ids.push_back(variant_id(id, v));
      }
      plans.push_back(std::move(plan));
    }
  }
  return plans;
}

std::vector<SplitPlan> build_embedding_quantifiers(const AspectConfig& config,
                                                   const std::vector<InferencePair>& pool) {
  config.validate();
  const Lexicon& lex = *config.lexicon;
  std::vector<const InferencePair*> d1;
  std::vector<const InferencePair*> d2;
  std::set<std::string> seen1;
  std::set<std::vector<std::string>> seen2;
  for (const auto& p : pool) {
    if (!is_base(p)) continue;
    if (p.depth == 1) {
      d1.push_back(&p);
      for (const auto& q : p.quantifiers) seen1.insert(q);
    } else if (p.depth == 2) {
      d2.push_back(&p);
      seen2.insert(p.quantifiers);
    }
  }
  for (const auto& a : lex.quantifiers) {
    if (!seen1.count(a.surface_form)) {
      throw CoverageError("pool has no depth-1 pair with quantifier '" + a.surface_form + "'");
    }
    for (const auto& b : lex.quantifiers) {
      if (!seen2.count({a.surface_form, b.surface_form})) {
        throw CoverageError("pool has no depth-2 pair with quantifiers (" + a.surface_form +
                            ", " + b.surface_form + ")");
      }
    }
  }

  const int n = static_cast<int>(std::min(quantifiers_with(lex, Direction::kUpward).size(),
                                          quantifiers_with(lex, Direction::kDownward).size()));
  std::vector<SplitPlan> plans;
  for (int run = 0; run < config.num_runs; ++run) {
    const auto p = quantifier_sequence_for_run(config, run, {}, n - 1);
    std::set<std::string> covered;
    std::vector<std::set<std::string>> step_sets;
    for (int step = 1; step <= static_cast<int>(p.size()); ++step) {
      step_sets.push_back({p[step - 1].first, p[step - 1].second});
      covered.insert(p[step - 1].first);
      covered.insert(p[step - 1].second);
      SplitPlan plan;
      plan.aspect = Aspect::kEmbeddingQuantifiers;
      plan.run_index = run;
      plan.step_index = step;
      plan.seed = run_seed(config, plan.aspect, run);
      plan.sequence = p;
      std::vector<const InferencePair*> train(d1.begin(), d1.end());
      std::vector<const InferencePair*> test;
      for (const auto* pair : d2) {
        const bool trained = std::any_of(step_sets.begin(), step_sets.end(),
                                         [&](const auto& s) { return all_in(pair->quantifiers, s); });
        if (trained) {
          train.push_back(pair);
        } else if (none_in(pair->quantifiers, covered)) {
          test.push_back(pair);
        }
      }
      finish(plan, train, test, false);
      plans.push_back(std::move(plan));
    }
  }
  return plans;
}

std::vector<SplitPlan> build_productivity(const AspectConfig& config,
                                          const std::vector<InferencePair>& train_side,
                                          const std::vector<InferencePair>& test_side) {
  config.validate();
  if (config.s < 3) throw ConfigError("productivity needs s >= 3");
  std::vector<SplitPlan> plans;
  for (int run = 0; run < config.num_runs; ++run) {
    for (int i = 1; i <= config.s - 2; ++i) {
      SplitPlan plan;
      plan.aspect = Aspect::kProductivity;
      plan.run_index = run;
      plan.step_index = i;
      plan.seed = run_seed(config, plan.aspect, run);
      std::vector<const InferencePair*> train;
      std::vector<const InferencePair*> test;
      for (const auto& p : train_side) {
        if (is_base(p) && p.depth <= i + 1) train.push_back(&p);
      }
      for (const auto& p : test_side) {
        if (is_base(p) && p.depth >= i + 2 && p.depth <= config.s) test.push_back(&p);
      }
      finish(plan, train, test, true);
      plans.push_back(std::move(plan));
    }
  }
  return plans;
}

std::vector<SplitPlan> build_localism(const AspectConfig& config,
                                      const std::vector<InferencePair>& train_side,
                                      const std::vector<InferencePair>& test_side) {
  config.validate();
  if (config.s < 3) throw ConfigError("localism needs s >= 3");
  std::vector<SplitPlan> plans;
  for (int run = 0; run < config.num_runs; ++run) {
    for (int d = 3; d <= config.s; ++d) {
      SplitPlan plan;
      plan.aspect = Aspect::kLocalism;
      plan.run_index = run;
      plan.step_index = d;
      plan.seed = run_seed(config, plan.aspect, run);
      std::vector<const InferencePair*> train;
      std::vector<const InferencePair*> test;
      for (const auto& p : train_side) {
        if (is_base(p) && p.depth == d) train.push_back(&p);
      }
      for (const auto& p : test_side) {
        if (is_base(p) && p.depth <= d) test.push_back(&p);
      }
      finish(plan, train, test, true);
      plans.push_back(std::move(plan));
    }
  }
  return plans;
}

std::string variant_id(const std::string& base_id, StructureVariant variant) {
  return base_id + variant_suffix(variant);
}

InferencePair make_structure_variant(const InferencePair& pair, StructureVariant variant,
                                     const Lexicon& lexicon) {
  if (variant == StructureVariant::kBase) {
    throw UnsupportedVariantError("pair " + pair.id + ": 'base' is not a structure variant");
  }
  if (pair.depth != 1 || !is_base(pair)) {
    throw UnsupportedVariantError("pair " + pair.id + " (depth " + std::to_string(pair.depth) +
                                  ", " + std::string(to_string(pair.structure_variant)) +
                                  "): structure variants need a depth-1 base pair");
  }
  const SentenceTree premise = parse_sentence(pair.premise, lexicon);
  const SentenceTree hypothesis = parse_sentence(pair.hypothesis, lexicon);
  Rng rng(hash_combine(pair.run_seed, stable_hash(pair.premise + "|" + pair.hypothesis + "|" +
                                                  std::string(to_string(variant)))));

  const bool verb_target = applies_to(pair.replacement) == Slot::kVerb;
  auto apply = [&](SentenceTree t, std::size_t a, std::size_t b) {
    t.variant = variant;
    if (variant == StructureVariant::kObjectPosition) {
      t.host.quantifier = 0;
      for (std::size_t k = 0; k < lexicon.quantifiers.size(); ++k) {
        if (lexicon.quantifiers[k].counting_semantics == CountingSemantics::kExistential) {
          t.host.quantifier = static_cast<std::uint8_t>(k);
          break;
        }
      }
      t.host.noun = NounGroup{};
      t.host.noun.noun = static_cast<std::uint8_t>(a);
      t.host.noun.plural = false;
      t.host.tv = static_cast<std::uint8_t>(b);
      t.object_relative_verb = verb_target;
      if (!verb_target) t.verb = VerbGroup{};
    } else {
      t.prefix = static_cast<std::int8_t>(a);
    }
    return t;
  };

  std::size_t rows = 0;
  std::size_t cols = 1;
  switch (variant) {
    case StructureVariant::kAdvPrefix: rows = lexicon.advs.size(); break;
    case StructureVariant::kPpPrefix: rows = lexicon.pps.size(); break;
    default:
      rows = lexicon.nouns.size();
      cols = lexicon.tv.size();
      break;
  }
  for (auto k : seeded_order(rows * cols, rng)) {
    const SentenceTree p = apply(premise, k / cols, k % cols);
    const SentenceTree h = apply(hypothesis, k / cols, k % cols);
    if (!has_unique_lemmas(p) || !has_unique_lemmas(h)) continue;

    const PolarityMarkedTree marked = mark_polarity(p);
    const Position pos{0, verb_target ? Slot::kVerb : Slot::kNoun};
    const auto it = std::find_if(marked.target_positions.begin(), marked.target_positions.end(),
                                 [&](const TargetPosition& t) { return t.position == pos; });
    if (it == marked.target_positions.end()) {
      throw UnsupportedVariantError("pair " + pair.id + ": target lost in variant");
    }
    // The rewrite direction is fixed by the base pair; only polarity may move.
    const bool generalizes =
        (pair.label == Label::kEntailment) == (pair.target_polarity == Direction::kUpward);
    const RewriteDirection dir =
        generalizes ? RewriteDirection::kToGeneral : RewriteDirection::kToSpecific;

    InferencePair out = pair;
    out.id = variant_id(pair.id, variant);
    out.premise = linearize(p);
    out.hypothesis = linearize(h);
    out.label = infer_label(it->polarity, dir);
    out.quantifiers = quantifier_sequence(p);
    out.target_argument = it->argument;
    out.target_polarity = it->polarity;
    out.structure_variant = variant;
    return out;
  }
  throw UnsupportedVariantError("pair " + pair.id + ": no " + std::string(to_string(variant)) +
                                " filler avoids repeating a word");
}

std::vector<InferencePair> materialize_variants(const std::vector<SplitPlan>& plans,
                                                const std::vector<InferencePair>& pool,
                                                const Lexicon& lexicon) {
  std::unordered_map<std::string_view, const InferencePair*> by_id;
  for (const auto& p : pool) by_id.emplace(p.id, &p);
  std::set<std::pair<std::string, StructureVariant>> wanted;
  for (const auto& plan : plans) {
    if (plan.variant_test_ids.empty()) continue;
    for (const auto& id : plan.test_ids) {
      for (const auto& [v, ids] : plan.variant_test_ids) wanted.insert({id, v});
    }
  }
  const std::vector<std::pair<std::string, StructureVariant>> jobs(wanted.begin(), wanted.end());
  std::vector<InferencePair> out(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
  std::vector<std::string> errors(jobs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& [id, v] = jobs[i];
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      errors[i] = "plan references unknown id " + id;
      continue;
    }
    try {
      out[i] = make_structure_variant(*it->second, v, lexicon);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw JoinError(e);
  }
  std::sort(out.begin(), out.end(),
            [](const InferencePair& a, const InferencePair& b) { return a.id < b.id; });
  return out;
}

std::string plan_to_json(const SplitPlan& plan) {
  Json j;
  j["version"] = kPlanVersion;
  j["name"] = plan.name();
  j["aspect"] = std::string(to_string(plan.aspect));
  j["run_index"] = plan.run_index;
  j["step_index"] = plan.step_index;
  j["seed"] = plan.seed;
  Json seq = Json::array();
  for (const auto& [u, d] : plan.sequence) seq.push_back({u, d});
  j["sequence"] = seq;
  Json held;
  held["quantifiers"] = plan.held_out.quantifiers;
  held["replacement"] = plan.held_out.replacement
                            ? Json(std::string(to_string(*plan.held_out.replacement)))
                            : Json(nullptr);
  held["depths"] = plan.held_out.depths;
  j["held_out"] = held;
  j["train_ids"] = plan.train_ids;
  j["test_ids"] = plan.test_ids;
  Json variants = Json::object();
  for (const auto& [v, ids] : plan.variant_test_ids) variants[std::string(to_string(v))] = ids;
  j["variant_test_ids"] = variants;
  Json groups = Json::object();
  for (const auto& [g, ids] : plan.test_groups) groups[g] = ids;
  j["test_groups"] = groups;
  return j.dump() + "\n";
}

SplitPlan plan_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed plan: ") + e.what());
  }
  SplitPlan plan;
  try {
    const auto version = j.at("version").get<std::string>();
    if (version != kPlanVersion) {
      throw SchemaError("plan version '" + version + "' is not " + std::string(kPlanVersion));
    }
    plan.aspect = aspect_from_string(j.at("aspect").get<std::string>());
    plan.run_index = j.at("run_index").get<int>();
    plan.step_index = j.at("step_index").get<int>();
    plan.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& e : j.at("sequence")) {
      plan.sequence.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    const Json& held = j.at("held_out");
    plan.held_out.quantifiers = held.at("quantifiers").get<std::set<std::string>>();
    if (!held.at("replacement").is_null()) {
      plan.held_out.replacement =
          replacement_from_string(held.at("replacement").get<std::string>());
    }
    plan.held_out.depths = held.at("depths").get<std::set<int>>();
    plan.train_ids = j.at("train_ids").get<std::vector<std::string>>();
    plan.test_ids = j.at("test_ids").get<std::vector<std::string>>();
    for (const auto& [v, ids] : j.at("variant_test_ids").items()) {
      plan.variant_test_ids[structure_variant_from_string(v)] = ids.get<std::vector<std::string>>();
    }
    for (const auto& [g, ids] : j.at("test_groups").items()) {
      plan.test_groups[g] = ids.get<std::vector<std::string>>();
    }
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("plan: ") + e.what());
  }
  return plan;
}

void write_plan(const std::filesystem::path& path, const SplitPlan& plan) {
  write_text(path, plan_to_json(plan));
}

SplitPlan read_plan(const std::filesystem::path& path) { return plan_from_json(read_text(path)); }

}  // namespace monogen
