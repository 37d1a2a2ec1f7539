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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monogen/cli.hpp"
#include "monogen/dataset.hpp"
#include "monogen/dataset_io.hpp"
#include "monogen/oracle.hpp"
#include "monogen/polarity.hpp"
#include "monogen/protocol.hpp"
#include "monogen/replacement.hpp"
#include "monogen/rng.hpp"
#include "monogen/scorer.hpp"
#include "monogen/sentence.hpp"
#include "monogen/tptp.hpp"
#include "support/fixtures.hpp"
#include "support/split_checks.hpp"

namespace fs = std::filesystem;
using namespace monogen;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr int kMaxDomain = 7;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void fail(const std::string& what) {
    ok_ = false;
    if (++failures_ <= 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  Outcome done(std::string summary) const {
    if (!ok_) summary += " | " + notes_.str() + (failures_ > 5 ? " ..." : "");
    return {ok_, summary};
  }

 private:
  bool ok_ = true;
  int failures_ = 0;
  std::ostringstream notes_;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

InferencePair make_pair(std::string premise, std::string hypothesis, Label label) {
  InferencePair p;
  p.id = "golden";
  p.premise = std::move(premise);
  p.hypothesis = std::move(hypothesis);
  p.label = label;
  return p;
}

// Shared state: the full seed-7 dataset written through the CLI, and the
// plans over it.
struct World {
  fs::path root;
  Dataset dataset;
  std::vector<InferencePair> pool;
  GoldIndex gold;
  std::vector<SplitPlan> plans;
  std::vector<InferencePair> variants;
};

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (code != 0) std::cerr << err.str();
  return code;
}

Outcome oracle_agreement() {
  GenerationConfig g;
  g.seed = kSeed;
  g.max_depth = 3;
  g.per_depth_quota = 40000;
  const auto pairs = sample_pairs(g, 2000);
  const auto results = verify_pairs(pairs, kMaxDomain, ExecutionPolicy::kParallel);
  const auto s = summarize(results);
  std::set<std::pair<int, ReplacementId>> strata;
  for (const auto& p : pairs) strata.insert({p.depth, p.replacement});
  std::set<ReplacementId> functions;
  for (const auto& p : pairs) functions.insert(p.replacement);
  std::set<int> depths;
  for (const auto& p : pairs) depths.insert(p.depth);
  Check c;
  c.expect(s.checked >= 2000, fmt("checked %zu", s.checked));
  c.expect(s.mismatches == 0, fmt("%zu mismatches", s.mismatches));
  c.expect(s.errors == 0, fmt("%zu errors", s.errors));
  c.expect(functions.size() == 7, fmt("%zu functions", functions.size()));
  c.expect(depths == std::set<int>{1, 2, 3}, "depths 1-3 not all sampled");
  for (const auto& r : results) {
    if (!r.agrees) c.fail(r.id + (r.error.empty() ? "" : ": " + r.error));
  }
  return c.done(fmt("%zu pairs, %zu strata, %zu mismatches, max_domain %d", s.checked,
                    strata.size(), s.mismatches, kMaxDomain));
}

Outcome polarity_golden() {
  Check c;
  const Lexicon& lex = testing::golden_lexicon();
  const std::pair<const char*, const char*> marks[] = {
      {"Some puppies ran", "Some puppies↑ ran↑ ."},
      {"No cats ran", "No cats↓ ran↓ ."},
      {"Some puppies which chased no cats ran", "Some puppies↑ which chased no cats↓ ran↑ ."},
  };
  for (const auto& [s, want] : marks) {
    const std::string got = polarity_dump(mark_polarity(parse_sentence(s, lex)));
    c.expect(got == want, got);
  }
  // Hand-checked entailments; the reverse of each is a non-entailment.
  struct Example {
    const char* premise;
    const char* hypothesis;
    Position target;
    RewriteDirection direction;
  };
  constexpr auto kGen = RewriteDirection::kToGeneral;
  constexpr auto kSpec = RewriteDirection::kToSpecific;
  const Example examples[] = {
      {"Some dogs ran", "Some animals ran", {0, Slot::kNoun}, kGen},
      {"Some small dogs ran", "Some dogs ran", {0, Slot::kNoun}, kGen},
      {"Several dogs ran", "Several animals ran", {0, Slot::kNoun}, kGen},
      {"No animals ran", "No dogs ran", {0, Slot::kNoun}, kSpec},
      {"Several small dogs ran", "Several dogs ran", {0, Slot::kNoun}, kGen},
      {"No dogs ran", "No small dogs ran", {0, Slot::kNoun}, kSpec},
      {"Slowly, several small dogs ran", "Slowly, several dogs ran", {0, Slot::kNoun}, kGen},
      {"Near the shore, several small dogs ran", "Near the shore, several dogs ran", {0, Slot::kNoun}, kGen},
      {"Some tiger touched several small dogs", "Some tiger touched several dogs", {0, Slot::kNoun}, kGen},
      {"Several animals that chased several dogs ran",
       "Several animals that chased several animals ran", {1, Slot::kNoun}, kGen},
      {"Some animals which chased some dogs ran", "Some animals which chased some animals ran", {1, Slot::kNoun}, kGen},
      {"Some animals which chased some cats which followed some dogs ran",
       "Some animals which chased some cats which followed some animals ran", {2, Slot::kNoun}, kGen},
      {"Less than three lions left", "Less than three lions left and cried", {0, Slot::kVerb}, kSpec},
      {"Few lions that hurt at most three small dogs walked",
       "Few lions that hurt at most three dogs walked", {1, Slot::kNoun}, kGen},
      {"Some elephant no rabbit which touched a few dogs hit rushed",
       "Some elephant no rabbit which touched a few small dogs hit rushed", {2, Slot::kNoun}, kSpec},
      {"Less than three tigers which accepted several rabbits that loved several foxes more "
       "than three monkeys cleaned dawdled",
       "Less than three tigers which accepted several rabbits that loved several foxes more "
       "than three monkeys which ate dinner cleaned dawdled", {3, Slot::kNoun}, kSpec},
  };
  std::size_t n = 0;
  for (const auto& [p, h, target, direction] : examples) {
    const auto m = mark_polarity(parse_sentence(p, lex));
    c.expect(infer_label(m.mark(target), direction) == Label::kEntailment,
             fmt("rule label wrong: %s", p));
    const auto fwd = check_entailment_finite(make_pair(p, h, Label::kEntailment), kMaxDomain, lex);
    c.expect(fwd.verdict == Verdict::kEntailed, fmt("not entailed: %s", p));
    // The reverse direction only needs a small countermodel.
    const auto rev = check_entailment_finite(make_pair(h, p, Label::kNonEntailment), 5, lex);
    c.expect(rev.verdict == Verdict::kCountermodelFound, fmt("reverse entailed: %s", h));
    n += 2;
  }
  // Q1 animals that chased Q2 dogs ran: the rule label matches the oracle for
  // every quantifier pair, "several" included.
  std::size_t grid = 0;
  std::vector<std::string> qs;
  for (const auto& q : lex.quantifiers) qs.push_back(q.surface_form);
  for (const auto& q1 : qs) {
    for (const auto& q2 : qs) {
      std::string cap = q1;
      cap[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(cap[0])));
      const std::string p = cap + " animals that chased " + q2 + " dogs ran";
      const std::string h = cap + " animals that chased " + q2 + " animals ran";
      const auto m = mark_polarity(parse_sentence(p, lex));
      const Label rule = infer_label(m.mark({1, Slot::kNoun}), RewriteDirection::kToGeneral);
      const auto r = check_entailment_finite(make_pair(p, h, rule), 6, lex);
      c.expect(oracle_label(r.verdict) == rule, "grid disagrees: " + p);
      ++grid;
    }
  }
  return c.done(fmt("3 polarity dumps, %zu example labels, %zu quantifier-grid labels", n, grid));
}

Outcome dataset_statistics(const World& w) {
  Check c;
  const Dataset& ds = w.dataset;
  c.expect(ds.train.size() <= 300000, fmt("train %zu > cap", ds.train.size()));
  c.expect(ds.test.size() <= 20000, fmt("test %zu > cap", ds.test.size()));
  double worst_dir = 0;
  for (const auto* side : {&ds.train, &ds.test}) {
    std::map<int, std::array<double, 4>> per_depth;  // ent, non, up, down
    for (const auto& p : *side) {
      auto& a = per_depth[p.depth];
      a[p.label == Label::kEntailment ? 0 : 1] += 1;
      a[p.target_polarity == Direction::kUpward ? 2 : 3] += 1;
    }
    for (const auto& [d, a] : per_depth) {
      c.expect(a[0] == a[1], fmt("depth %d labels %.0f/%.0f", d, a[0], a[1]));
      const double dev = std::abs(a[2] - a[3]) / (a[2] + a[3]);
      worst_dir = std::max(worst_dir, dev);
      c.expect(dev <= 0.01, fmt("depth %d direction skew %.4f", d, dev));
    }
  }
  std::map<int, std::set<std::vector<std::string>>> combos;
  for (const auto& p : w.pool) combos[p.depth].insert(p.quantifiers);
  std::size_t expected = 1;
  for (int d = 1; d <= 5; ++d) {
    expected *= 8;
    c.expect(combos[d].size() == expected,
             fmt("depth %d has %zu of %zu combinations", d, combos[d].size(), expected));
  }
  return c.done(fmt("train %zu, test %zu, worst direction skew %.4f, all combinations at depths 1-5",
                    ds.train.size(), ds.test.size(), worst_dir));
}

Outcome split_integrity(const World& w) {
  Check c;
  std::map<Aspect, std::size_t> per_aspect;
  for (const auto& plan : w.plans) {
    ++per_aspect[plan.aspect];
    for (const auto& v : testing::check_plan(plan, w.gold)) c.fail(plan.name() + ": " + v);
  }
  c.expect(per_aspect.size() == 4, "not every aspect produced plans");
  std::string counts;
  for (const auto& [a, n] : per_aspect) counts += fmt(" %s=%zu", std::string(to_string(a)).c_str(), n);
  return c.done(fmt("%zu plans checked:", w.plans.size()) + counts);
}

Outcome variant_labels(const World& w) {
  Check c;
  std::map<StructureVariant, std::vector<const InferencePair*>> by_kind;
  for (const auto& v : w.variants) by_kind[v.structure_variant].push_back(&v);
  c.expect(by_kind.size() == 3, fmt("%zu variant kinds", by_kind.size()));
  Rng rng(hash_combine(kSeed, 0x7a));
  for (auto& [kind, vs] : by_kind) rng.shuffle(vs);
  std::vector<InferencePair> sample;
  for (std::size_t i = 0; sample.size() < 200; ++i) {
    bool any = false;
    for (const auto& [kind, vs] : by_kind) {
      if (i < vs.size() && sample.size() < 200) {
        sample.push_back(*vs[i]);
        any = true;
      }
    }
    if (!any) break;
  }
  c.expect(sample.size() == 200, fmt("only %zu variants", sample.size()));
  std::map<std::string, const InferencePair*> base;
  for (const auto& p : w.pool) base[p.id] = &p;
  for (const auto& v : sample) {
    const std::string base_id = v.id.substr(0, v.id.rfind('_'));
    const auto it = base.find(base_id);
    if (it == base.end()) {
      c.fail("no base pair for " + v.id);
      continue;
    }
    c.expect(v.label == it->second->label, "label changed: " + v.id);
  }
  const auto s = summarize(verify_pairs(sample, kMaxDomain, ExecutionPolicy::kParallel));
  c.expect(s.mismatches == 0 && s.errors == 0,
           fmt("%zu mismatches, %zu errors", s.mismatches, s.errors));
  return c.done(fmt("%zu variants (adv/pp/obj), %zu oracle mismatches", sample.size(), s.mismatches));
}

Outcome reference_predictors(const World& w) {
  Check c;
  std::size_t groups = 0;
  for (const auto& plan : w.plans) {
    std::vector<const InferencePair*> train, test;
    for (const auto& id : plan.train_ids) train.push_back(w.gold.at(id));
    for (const auto& id : required_ids(plan)) test.push_back(w.gold.at(id));
    const auto r = score(builtin_predict(Strategy::kMajority, train, test, kSeed), plan, w.gold);
    for (const auto& [name, g] : r.groups) {
      const auto& ids = name.starts_with("variant/")
                            ? plan.variant_test_ids.at(structure_variant_from_string(name.substr(8)))
                            : plan.test_groups.at(name);
      std::size_t ent = 0;
      for (const auto& id : ids) ent += w.gold.at(id)->label == Label::kEntailment;
      if (2 * ent != ids.size()) continue;
      ++groups;
      c.expect(g.mean == 50.0, fmt("%s/%s majority %.1f", plan.name().c_str(), name.c_str(), g.mean));
    }
  }
  // Lexical overlap on two fixed subsets of the dataset.
  auto subset_score = [&](const std::function<bool(const InferencePair&)>& keep, std::size_t& n) {
    SplitPlan plan;
    plan.aspect = Aspect::kProductivity;
    std::vector<const InferencePair*> test;
    for (const auto& p : w.pool) {
      if (keep(p)) {
        plan.test_ids.push_back(p.id);
        test.push_back(&p);
      }
    }
    plan.test_groups["all"] = plan.test_ids;
    n = test.size();
    return score(builtin_predict(Strategy::kLexicalOverlap, {}, test, kSeed), plan, w.gold)
        .groups.at("all")
        .mean;
  };
  std::size_t n_down = 0, n_up = 0;
  const double down = subset_score(
      [](const InferencePair& p) {
        return p.label == Label::kEntailment && p.target_polarity == Direction::kDownward &&
               tokenize(p.hypothesis).size() > tokenize(p.premise).size();
      },
      n_down);
  const double up = subset_score(
      [](const InferencePair& p) {
        return p.label == Label::kEntailment && p.target_polarity == Direction::kUpward &&
               p.replacement == ReplacementId::kAdjective;
      },
      n_up);
  c.expect(down == 0.0, fmt("lexical_overlap %.1f on downward insertions", down));
  c.expect(up == 100.0, fmt("lexical_overlap %.1f on upward adjective deletions", up));
  c.expect(groups > 0 && n_down > 0 && n_up > 0, "empty subsets");
  return c.done(fmt("majority 50.0 on %zu balanced groups; lexical_overlap %.1f (n=%zu) / %.1f (n=%zu)",
                    groups, down, n_down, up, n_up));
}

std::string find_prover() {
  if (const char* env = std::getenv("MONOGEN_PROVER"); env && *env) return env;
  for (const char* name : {"eprover", "vampire"}) {
    const std::string cmd = std::string("command -v ") + name + " >/dev/null 2>&1";
    if (std::system(cmd.c_str()) == 0) return name;
  }
  return "";
}

Outcome tptp_export(const World& w) {
  Check c;
  GenerationConfig g;
  g.seed = kSeed;
  g.max_depth = 3;
  g.per_depth_quota = 40000;
  std::vector<InferencePair> pairs = sample_pairs(g, 2000);
  pairs.insert(pairs.end(), w.variants.begin(), w.variants.begin() + std::min<std::size_t>(600, w.variants.size()));
  const fs::path dir = w.root / "tptp";
  fs::create_directories(dir);
  std::size_t bad = 0;
  for (const auto& p : pairs) {
    const std::string text = export_tptp(p);
    const auto diag = check_tptp_syntax(text);
    if (!diag.ok) {
      ++bad;
      c.fail(p.id + fmt(" line %d: ", diag.line) + diag.message);
    }
  }
  std::string summary = fmt("%zu exported files, %zu invalid", pairs.size(), bad);
  const std::string prover = find_prover();
  if (prover.empty()) {
    summary += "; prover agreement SKIPPED (no eprover or vampire on PATH)";
    return c.done(summary);
  }
  // 100 pairs through tools/prove.sh.
  std::size_t disagree = 0;
  for (std::size_t i = 0; i < 100 && i < pairs.size(); ++i) {
    const fs::path file = dir / (pairs[i].id + ".p");
    write_text(file, export_tptp(pairs[i]));
    const std::string cmd = std::string(MONOGEN_PROVE_SCRIPT) + " '" + file.string() + "' >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : 2;
    const bool theorem = code == 0;
    if (code > 1 || theorem != (pairs[i].label == Label::kEntailment)) {
      ++disagree;
      c.fail(fmt("prover code %d on ", code) + pairs[i].id);
    }
  }
  return c.done(summary + fmt("; prover %s disagreed on %zu of 100", prover.c_str(), disagree));
}

Outcome determinism(const World& w) {
  Check c;
  const fs::path again = w.root / "again";
  c.expect(cli({"generate", "--seed", "7", "--out", again.string()}) == 0, "second generate failed");
  for (const char* f : {"train.jsonl", "test.jsonl", "manifest.json"}) {
    c.expect(read_text(w.root / "dataset" / f) == read_text(again / f), std::string(f) + " differs");
  }
  c.expect(cli({"split", "--dataset", again.string(), "--seed", "7", "--out",
                (w.root / "plans_again").string()}) == 0,
           "second split failed");
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(w.root / "plans")) {
    const fs::path other = w.root / "plans_again" / e.path().filename();
    c.expect(fs::exists(other) && read_text(e.path()) == read_text(other),
             e.path().filename().string() + " differs");
    ++files;
  }
  return c.done(fmt("dataset files and %zu plan files byte-identical across runs", files));
}

}  // namespace

int main() {
  const fs::path root = fs::temp_directory_path() / "monogen_acceptance";
  fs::remove_all(root);
  fs::create_directories(root);

  using Clock = std::chrono::steady_clock;
  int failed = 0;
  auto report = [&](int n, const char* name, const std::function<Outcome()>& run) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << n << "] " << name << ": " << o.detail
              << fmt(" (%.1fs)", secs) << std::endl;
  };

  World w;
  w.root = root;
  bool built = false;
  std::string setup_error;
  try {
    if (cli({"generate", "--seed", "7", "--out", (root / "dataset").string()}) != 0) {
      throw std::runtime_error("generate failed");
    }
    if (cli({"split", "--dataset", (root / "dataset").string(), "--seed", "7", "--out",
             (root / "plans").string()}) != 0) {
      throw std::runtime_error("split failed");
    }
    w.dataset = read_dataset(root / "dataset");
    w.pool = w.dataset.train;
    w.pool.insert(w.pool.end(), w.dataset.test.begin(), w.dataset.test.end());
    for (const auto& e : fs::directory_iterator(root / "plans")) {
      const std::string name = e.path().filename().string();
      if (name.find("_run") != std::string::npos && e.path().extension() == ".json") {
        w.plans.push_back(read_plan(e.path()));
      }
    }
    std::sort(w.plans.begin(), w.plans.end(),
              [](const SplitPlan& a, const SplitPlan& b) { return a.name() < b.name(); });
    w.variants = read_jsonl(root / "plans" / "variants.jsonl");
    w.gold = index_pairs({&w.pool, &w.variants});
    built = true;
  } catch (const std::exception& e) {
    setup_error = e.what();
  }
  auto needs_world = [&](const std::function<Outcome(const World&)>& f) {
    return [&, f]() -> Outcome {
      if (!built) return {false, "setup failed: " + setup_error};
      return f(w);
    };
  };

  report(1, "oracle agreement", oracle_agreement);
  report(2, "polarity and label golden tests", polarity_golden);
  report(3, "dataset statistics", needs_world(dataset_statistics));
  report(4, "split integrity", needs_world(split_integrity));
  report(5, "structural-variant labels", needs_world(variant_labels));
  report(6, "reference predictors", needs_world(reference_predictors));
  report(7, "TPTP export", needs_world(tptp_export));
  report(8, "determinism", needs_world(determinism));

  fs::remove_all(root);
  return failed == 0 ? 0 : 1;
}
