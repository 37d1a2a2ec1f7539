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

#include "monogen/dataset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "monogen/dataset_io.hpp"
#include "monogen/errors.hpp"
#include "monogen/polarity.hpp"
#include "monogen/rng.hpp"

namespace monogen {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kUp = 0;
constexpr int kDown = 1;

int dir_index(Direction d) { return d == Direction::kUpward ? kUp : kDown; }

std::uint64_t pair_key(std::uint64_t seed, const InferencePair& p) {
  return hash_combine(seed, stable_hash(p.premise + "\n" + p.hypothesis));
}

std::string combo_key(const std::vector<std::string>& qs) {
  std::string k;
  for (const auto& q : qs) {
    k += q;
    k += '|';
  }
  return k;
}

// One seeded minimal pair for a deep premise. Targets with the wanted
// polarity are tried first.
std::optional<ContrastUnit> pick_unit(const SentenceTree& tree, Direction want, Rng& rng) {
  const PolarityMarkedTree marked = mark_polarity(tree);
  std::vector<TargetPosition> preferred;
  std::vector<TargetPosition> others;
  for (const auto& t : marked.target_positions) {
    (t.polarity == want ? preferred : others).push_back(t);
  }
  rng.shuffle(preferred);
  rng.shuffle(others);
  preferred.insert(preferred.end(), others.begin(), others.end());
  for (const auto& target : preferred) {
    std::vector<ReplacementId> fs;
    for (auto f : kAllReplacements) {
      if (is_compatible(target, f, tree.depth())) fs.push_back(f);
    }
    rng.shuffle(fs);
    for (auto f : fs) {
      auto units = contrast_units(marked, target, f);
      if (!units.empty()) return units[rng.below(units.size())];
    }
  }
  return std::nullopt;
}

struct Unit {
  std::size_t ent = 0;
  std::size_t non = 0;
  int depth = 1;
  int dir = kUp;
  std::uint64_t order = 0;
  std::string combo;
  bool mandatory = false;
  int side = 0;  // 0 train, 1 test
};

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Largest per-depth allocations t_d in [lo_d, hi_d] with sum <= budget,
// as level as possible; leftover units go to the shallowest depths.
std::map<int, std::size_t> water_fill(const std::map<int, std::size_t>& lo,
                                      const std::map<int, std::size_t>& hi, std::size_t budget) {
  auto total_at = [&](std::size_t level) {
    std::size_t s = 0;
    for (const auto& [d, h] : hi) s += std::clamp(level, lo.at(d), h);
    return s;
  };
  std::size_t top = 0;
  for (const auto& [d, h] : hi) top = std::max(top, h);
  std::size_t a = 0;
  std::size_t b = top;
  while (a < b) {
    const std::size_t mid = a + (b - a + 1) / 2;
    if (total_at(mid) <= budget) {
      a = mid;
    } else {
      b = mid - 1;
    }
  }
  std::map<int, std::size_t> out;
  std::size_t used = 0;
  for (const auto& [d, h] : hi) {
    out[d] = std::clamp(a, lo.at(d), h);
    used += out[d];
  }
  for (auto& [d, t] : out) {
    if (used >= budget) break;
    if (t < hi.at(d)) {
      ++t;
      ++used;
    }
  }
  return out;
}

std::string stratum_name(int depth, Direction d) {
  return "depth=" + std::to_string(depth) + " direction=" + std::string(to_string(d));
}

Json side_json(const SideCounts& s) {
  Json j;
  j["pairs"] = s.pairs;
  Json strata = Json::array();
  for (const auto& [key, n] : s.strata) {
    const auto& [depth, label, dir] = key;
    Json e;
    e["depth"] = depth;
    e["label"] = std::string(to_string(label));
    e["direction"] = std::string(to_string(dir));
    e["count"] = n;
    strata.push_back(e);
  }
  j["strata"] = strata;
  return j;
}

SideCounts side_from_json(const Json& j) {
  SideCounts s;
  s.pairs = j.at("pairs").get<std::size_t>();
  for (const auto& e : j.at("strata")) {
    s.strata[{e.at("depth").get<int>(), label_from_string(e.at("label").get<std::string>()),
              direction_from_string(e.at("direction").get<std::string>())}] =
        e.at("count").get<std::size_t>();
  }
  return s;
}

}  // namespace

void DatasetConfig::validate() const {
  generation.validate();
  if (train_cap == 0 || test_cap == 0) throw ConfigError("caps must be positive");
  if (train_cap + test_cap > total_cap) {
    throw ConfigError("train_cap + test_cap exceeds total_cap");
  }
}

double DatasetConfig::test_fraction() const {
  return static_cast<double>(test_cap) / static_cast<double>(train_cap + test_cap);
}

SideCounts count_strata(const std::vector<InferencePair>& pairs) {
  SideCounts s;
  s.pairs = pairs.size();
  for (const auto& p : pairs) ++s.strata[{p.depth, p.label, p.target_polarity}];
  return s;
}

std::vector<InferencePair> build_inventory(const GenerationConfig& config) {
  config.validate();
  std::vector<InferencePair> out;
  for (int depth = 1; depth <= config.max_depth; ++depth) {
    if (depth == 1) {
      for_each_premise(config, depth, [&](const SentenceTree& t) {
        const PolarityMarkedTree marked = mark_polarity(t);
        for (const auto& target : marked.target_positions) {
          for (auto f : kAllReplacements) {
            for (const auto& unit : contrast_units(marked, target, f)) {
              for (auto& p : unit_pairs(unit, config.seed)) out.push_back(std::move(p));
            }
          }
        }
      });
      continue;
    }
    const std::uint64_t total = premise_count(config, depth);
    const auto quota = static_cast<std::uint64_t>(config.per_depth_quota);
    const bool thin = total > quota;
    const std::uint64_t depth_seed = hash_combine(config.seed, 0xd00 + depth);
    Rng rng(depth_seed);
    std::set<std::string> combos;
    std::size_t up = 0;
    std::size_t down = 0;
    std::uint64_t index = 0;
    for_each_premise(config, depth, [&](const SentenceTree& t) {
      const std::uint64_t j = index++;
      const auto qs = quantifier_sequence(t);
      const bool fresh = combos.insert(combo_key(qs)).second;
      if (thin && !fresh && hash_combine(depth_seed, j) % total >= quota) return;
      const Direction want = up <= down ? Direction::kUpward : Direction::kDownward;
      auto unit = pick_unit(t, want, rng);
      if (!unit) return;
      auto pairs = unit_pairs(*unit, config.seed);
      (pairs[0].target_polarity == Direction::kUpward ? up : down) += 1;
      for (auto& p : pairs) out.push_back(std::move(p));
    });
  }
  return out;
}

std::vector<InferencePair> stratified_sample(const std::vector<InferencePair>& pool,
                                             std::size_t n, std::uint64_t seed) {
  std::map<std::pair<int, ReplacementId>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    buckets[{pool[i].depth, pool[i].replacement}].push_back(i);
  }
  Rng rng(hash_combine(seed, 0x5a3b1e));
  for (auto& [key, idx] : buckets) rng.shuffle(idx);
  std::vector<InferencePair> out;
  for (std::size_t round = 0; out.size() < n; ++round) {
    bool any = false;
    for (auto& [key, idx] : buckets) {
      if (round >= idx.size() || out.size() >= n) continue;
      any = true;
      InferencePair p = pool[idx[round]];
      if (p.id.empty()) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "s%d_%s_%05zu", p.depth,
                      std::string(to_string(p.replacement)).substr(0, 2).c_str(), out.size() + 1);
        p.id = buf;
      }
      out.push_back(std::move(p));
    }
    if (!any) break;
  }
  return out;
}

std::vector<InferencePair> sample_pairs(const GenerationConfig& config, std::size_t n) {
  std::vector<InferencePair> inventory = build_inventory(config);
  for (auto& p : inventory) p.id.clear();
  return stratified_sample(inventory, n, config.seed);
}

Dataset balance_and_cap(const std::vector<InferencePair>& input, const DatasetConfig& config) {
  config.validate();
  const std::uint64_t seed = config.generation.seed;

  // Drop repeated (premise, hypothesis) pairs, then regroup minimal pairs.
  std::vector<std::size_t> kept;
  {
    std::set<std::pair<std::string_view, std::string_view>> seen;
    for (std::size_t i = 0; i < input.size(); ++i) {
      if (seen.insert({input[i].premise, input[i].hypothesis}).second) kept.push_back(i);
    }
  }
  std::map<std::pair<std::string_view, std::string_view>, std::vector<std::size_t>> groups;
  std::vector<std::pair<std::string_view, std::string_view>> group_order;
  for (auto i : kept) {
    const auto& p = input[i];
    std::pair<std::string_view, std::string_view> key =
        p.premise < p.hypothesis ? std::pair<std::string_view, std::string_view>{p.premise, p.hypothesis}
                                 : std::pair<std::string_view, std::string_view>{p.hypothesis, p.premise};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) group_order.push_back(key);
    it->second.push_back(i);
  }

  std::vector<Unit> units;
  std::map<std::pair<int, int>, std::array<std::vector<std::size_t>, 2>> singles;
  auto add_unit = [&](std::size_t ent, std::size_t non) {
    Unit u;
    u.ent = ent;
    u.non = non;
    u.depth = input[ent].depth;
    u.dir = dir_index(input[ent].target_polarity);
    u.order = pair_key(seed, input[ent]);
    u.combo = combo_key(input[ent].quantifiers);
    units.push_back(std::move(u));
  };
  for (const auto& key : group_order) {
    std::vector<std::size_t> ents;
    std::vector<std::size_t> nons;
    for (auto i : groups[key]) {
      (input[i].label == Label::kEntailment ? ents : nons).push_back(i);
    }
    const std::size_t m = std::min(ents.size(), nons.size());
    for (std::size_t k = 0; k < m; ++k) add_unit(ents[k], nons[k]);
    for (std::size_t k = m; k < ents.size(); ++k) {
      const auto& p = input[ents[k]];
      singles[{p.depth, dir_index(p.target_polarity)}][0].push_back(ents[k]);
    }
    for (std::size_t k = m; k < nons.size(); ++k) {
      const auto& p = input[nons[k]];
      singles[{p.depth, dir_index(p.target_polarity)}][1].push_back(nons[k]);
    }
  }
  for (auto& [stratum, lists] : singles) {
    const std::size_t m = std::min(lists[0].size(), lists[1].size());
    for (std::size_t k = 0; k < m; ++k) add_unit(lists[0][k], lists[1][k]);
  }

  std::set<int> depths;
  for (auto i : kept) depths.insert(input[i].depth);
  {
    std::map<std::pair<int, int>, std::array<std::size_t, 2>> labels;
    for (auto i : kept) {
      const auto& p = input[i];
      ++labels[{p.depth, dir_index(p.target_polarity)}][p.label == Label::kEntailment ? 0 : 1];
    }
    for (int d : depths) {
      for (auto dir : {Direction::kUpward, Direction::kDownward}) {
        const auto& c = labels[{d, dir_index(dir)}];
        if (c[0] == 0 || c[1] == 0) {
          const char* missing = c[0] == 0 ? "entailment" : "non_entailment";
          throw BalanceError("stratum " + stratum_name(d, dir) + " has no " + missing +
                             " pairs; label balance is impossible");
        }
      }
    }
  }

  // Sides are assigned per connected component of premises.
  std::unordered_map<std::string_view, int> sentence_ids;
  UnionFind uf;
  auto sid = [&](std::string_view s) {
    auto [it, inserted] = sentence_ids.try_emplace(s, 0);
    if (inserted) it->second = uf.add();
    return it->second;
  };
  for (const auto& u : units) {
    uf.unite(sid(input[u.ent].premise), sid(input[u.non].premise));
  }
  struct Component {
    std::uint64_t order = ~std::uint64_t{0};
    std::map<std::pair<int, int>, std::size_t> counts;
    int side = 0;
  };
  std::map<int, Component> components;
  for (const auto& u : units) {
    auto& c = components[uf.find(sid(input[u.ent].premise))];
    c.order = std::min(c.order, u.order);
    ++c.counts[{u.depth, u.dir}];
  }
  std::map<std::pair<int, int>, std::size_t> stratum_total;
  for (const auto& u : units) ++stratum_total[{u.depth, u.dir}];
  std::map<std::pair<int, int>, std::size_t> test_target;
  std::map<std::pair<int, int>, std::size_t> test_taken;
  for (const auto& [k, n] : stratum_total) {
    test_target[k] = static_cast<std::size_t>(
        std::ceil(config.test_fraction() * static_cast<double>(n)));
  }
  std::vector<Component*> walk;
  for (auto& [root, c] : components) walk.push_back(&c);
  std::sort(walk.begin(), walk.end(),
            [](const Component* a, const Component* b) { return a->order < b->order; });
  for (auto* c : walk) {
    bool room = true;
    for (const auto& [k, n] : c->counts) room = room && test_taken[k] < test_target[k];
    if (!room) continue;
    c->side = 1;
    for (const auto& [k, n] : c->counts) test_taken[k] += n;
  }
  for (auto& u : units) u.side = components[uf.find(sid(input[u.ent].premise))].side;

  // One unit per quantifier combination is kept wherever budgets allow.
  std::sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) {
    return std::tie(a.depth, a.order, a.ent) < std::tie(b.depth, b.order, b.ent);
  });
  {
    std::set<std::pair<int, std::string>> covered;
    for (auto& u : units) u.mandatory = covered.insert({u.depth, u.combo}).second;
  }

  std::array<std::vector<const Unit*>, 2> chosen;
  const std::array<std::size_t, 2> caps = {config.train_cap, config.test_cap};
  for (int side = 0; side < 2; ++side) {
    std::map<std::pair<int, int>, std::size_t> avail;
    std::map<std::pair<int, int>, std::size_t> mand;
    for (const auto& u : units) {
      if (u.side != side) continue;
      ++avail[{u.depth, u.dir}];
      if (u.mandatory) ++mand[{u.depth, u.dir}];
    }
    std::map<int, std::size_t> lo;
    std::map<int, std::size_t> hi;
    std::size_t lo_sum = 0;
    for (int d : depths) {
      lo[d] = std::max(mand[{d, kUp}], mand[{d, kDown}]);
      hi[d] = std::max(lo[d], std::min(avail[{d, kUp}], avail[{d, kDown}]));
      lo_sum += lo[d];
    }
    const std::size_t budget = caps[side] / 4;
    if (lo_sum > budget) {
      for (auto& [d, l] : lo) l = 0;
    }
    const auto level = water_fill(lo, hi, budget);
    std::map<std::pair<int, int>, std::size_t> taken;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : units) {
        if (u.side != side || u.mandatory != (pass == 0)) continue;
        auto& t = taken[{u.depth, u.dir}];
        if (t >= level.at(u.depth)) continue;
        ++t;
        chosen[side].push_back(&u);
      }
    }
  }

  Dataset ds;
  std::map<int, std::size_t> next_id;
  for (int side = 0; side < 2; ++side) {
    std::vector<InferencePair> pairs;
    for (const Unit* u : chosen[side]) {
      pairs.push_back(input[u->ent]);
      pairs.push_back(input[u->non]);
    }
    std::sort(pairs.begin(), pairs.end(), [&](const InferencePair& a, const InferencePair& b) {
      const auto ka = pair_key(seed, a);
      const auto kb = pair_key(seed, b);
      return std::tie(a.depth, ka, a.premise, a.hypothesis) <
             std::tie(b.depth, kb, b.premise, b.hypothesis);
    });
    for (auto& p : pairs) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "d%d_%07zu", p.depth, ++next_id[p.depth]);
      p.id = buf;
    }
    (side == 0 ? ds.train : ds.test) = std::move(pairs);
  }

  DatasetManifest& m = ds.manifest;
  m.schema = std::string(kJsonlSchema);
  m.seed = seed;
  m.max_depth = depths.empty() ? 0 : *depths.rbegin();
  m.total_cap = config.total_cap;
  m.train_cap = config.train_cap;
  m.test_cap = config.test_cap;
  m.train = count_strata(ds.train);
  m.test = count_strata(ds.test);
  std::map<int, std::set<std::vector<std::string>>> present;
  for (const auto* side : {&ds.train, &ds.test}) {
    for (const auto& p : *side) present[p.depth].insert(p.quantifiers);
  }
  const double q = static_cast<double>(config.generation.lexicon->quantifiers.size());
  for (int d : depths) {
    const auto expected = static_cast<std::size_t>(std::pow(q, d));
    m.quantifier_combinations[d] = present[d].size();
    m.missing_combinations[d] = expected > present[d].size() ? expected - present[d].size() : 0;
  }
  return ds;
}

Dataset generate_dataset(const DatasetConfig& config) {
  config.validate();
  return balance_and_cap(build_inventory(config.generation), config);
}

std::string manifest_to_json(const DatasetManifest& m) {
  Json j;
  j["version"] = m.version;
  j["schema"] = m.schema;
  j["seed"] = m.seed;
  j["max_depth"] = m.max_depth;
  j["total_cap"] = m.total_cap;
  j["train_cap"] = m.train_cap;
  j["test_cap"] = m.test_cap;
  j["train"] = side_json(m.train);
  j["test"] = side_json(m.test);
  Json combos = Json::object();
  Json missing = Json::object();
  for (const auto& [d, n] : m.quantifier_combinations) combos[std::to_string(d)] = n;
  for (const auto& [d, n] : m.missing_combinations) missing[std::to_string(d)] = n;
  j["quantifier_combinations"] = combos;
  j["missing_combinations"] = missing;
  return j.dump(2) + "\n";
}

DatasetManifest manifest_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed dataset manifest: ") + e.what());
  }
  DatasetManifest m;
  try {
    m.version = j.at("version").get<std::string>();
    if (m.version != kDatasetVersion) {
      throw SchemaError("dataset manifest version '" + m.version + "' is not " +
                        std::string(kDatasetVersion));
    }
    m.schema = j.at("schema").get<std::string>();
    if (m.schema != kJsonlSchema) {
      throw SchemaError("dataset record schema '" + m.schema + "' is not " +
                        std::string(kJsonlSchema));
    }
    m.seed = j.at("seed").get<std::uint64_t>();
    m.max_depth = j.at("max_depth").get<int>();
    m.total_cap = j.at("total_cap").get<std::size_t>();
    m.train_cap = j.at("train_cap").get<std::size_t>();
    m.test_cap = j.at("test_cap").get<std::size_t>();
    m.train = side_from_json(j.at("train"));
    m.test = side_from_json(j.at("test"));
    for (const auto& [d, n] : j.at("quantifier_combinations").items()) {
      m.quantifier_combinations[std::stoi(d)] = n.get<std::size_t>();
    }
    for (const auto& [d, n] : j.at("missing_combinations").items()) {
      m.missing_combinations[std::stoi(d)] = n.get<std::size_t>();
    }
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("dataset manifest: ") + e.what());
  }
  return m;
}

void write_dataset(const std::filesystem::path& dir, const Dataset& dataset, bool compress) {
  std::filesystem::create_directories(dir);
  const char* ext = compress ? ".jsonl.gz" : ".jsonl";
  write_jsonl(dir / (std::string("train") + ext), dataset.train);
  write_jsonl(dir / (std::string("test") + ext), dataset.test);
  write_text(dir / "manifest.json", manifest_to_json(dataset.manifest));
}

Dataset read_dataset(const std::filesystem::path& dir) {
  Dataset ds;
  ds.manifest = manifest_from_json(read_text(dir / "manifest.json"));
  auto split = [&](const std::string& name) {
    const auto plain = dir / (name + ".jsonl");
    return read_jsonl(std::filesystem::exists(plain) ? plain : dir / (name + ".jsonl.gz"));
  };
  ds.train = split("train");
  ds.test = split("test");
  return ds;
}

}  // namespace monogen
