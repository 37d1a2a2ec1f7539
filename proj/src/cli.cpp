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

#include "monogen/cli.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monogen/dataset.hpp"
#include "monogen/dataset_io.hpp"
#include "monogen/errors.hpp"
#include "monogen/oracle.hpp"
#include "monogen/protocol.hpp"
#include "monogen/rng.hpp"
#include "monogen/scorer.hpp"
#include "monogen/tptp.hpp"

namespace monogen {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr const char* kPlansIndex = "plans.json";
constexpr const char* kVariantsFile = "variants.jsonl";

struct GenerateArgs {
  std::uint64_t seed = 0;
  int max_depth = 5;
  int quota = 40000;
  std::size_t train_cap = 300000;
  std::size_t test_cap = 20000;
  bool compress = false;
  std::string out;
};

struct VerifyArgs {
  std::uint64_t seed = 0;
  std::size_t sample = 2000;
  int max_domain = 7;
  int max_depth = 3;
  int quota = 40000;
  std::string dataset;
  std::string tptp_out;
  std::string prover;
  std::string out;
  bool serial = false;
};

struct SplitArgs {
  std::string dataset;
  std::string aspect = "all";
  int num_runs = 5;
  std::uint64_t seed = 0;
  int s = 5;
  std::string out;
};

struct ScoreArgs {
  std::vector<std::string> plans;
  std::vector<std::string> predictions;
  std::string strategy;
  std::string dataset;
  std::string variants;
  std::uint64_t seed = 0;
  std::string out;
};

struct BaselineArgs {
  std::string strategy;
  std::vector<std::string> plans;
  std::string dataset;
  std::string variants;
  std::uint64_t seed = 0;
  std::string out;
};

std::vector<InferencePair> concat(const Dataset& ds) {
  std::vector<InferencePair> all = ds.train;
  all.insert(all.end(), ds.test.begin(), ds.test.end());
  return all;
}

// Plan paths from files and directories (every "*_run*_step*.json" inside).
std::vector<fs::path> expand_plans(const std::vector<std::string>& args) {
  std::vector<fs::path> out;
  for (const auto& a : args) {
    const fs::path p(a);
    if (!fs::is_directory(p)) {
      out.push_back(p);
      continue;
    }
    std::vector<fs::path> found;
    for (const auto& e : fs::directory_iterator(p)) {
      const std::string name = e.path().filename().string();
      if (e.path().extension() == ".json" && name.find("_run") != std::string::npos &&
          name.find("_step") != std::string::npos) {
        found.push_back(e.path());
      }
    }
    std::sort(found.begin(), found.end());
    if (found.empty()) throw ConfigError("no plan files in " + p.string());
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

struct PlanSet {
  std::vector<SplitPlan> plans;
  Dataset dataset;
  std::vector<InferencePair> variants;
  GoldIndex gold;
};

// Reads plans, the dataset and the variant pool the plans refer to.
void load_plans(PlanSet& set, const std::vector<std::string>& plan_args,
                const std::string& dataset_dir, const std::string& variants_arg) {
  const auto paths = expand_plans(plan_args);
  for (const auto& p : paths) set.plans.push_back(read_plan(p));
  set.dataset = read_dataset(dataset_dir);
  const bool need_variants = std::any_of(set.plans.begin(), set.plans.end(),
                                         [](const SplitPlan& p) { return !p.variant_test_ids.empty(); });
  fs::path variants_path = variants_arg;
  if (variants_path.empty() && need_variants) variants_path = paths.front().parent_path() / kVariantsFile;
  if (!variants_path.empty()) {
    if (!fs::exists(variants_path)) {
      throw ConfigError("plans reference structure variants but " + variants_path.string() +
                        " does not exist (pass --variants)");
    }
    set.variants = read_jsonl(variants_path);
  }
  set.gold = index_pairs({&set.dataset.train, &set.dataset.test, &set.variants});
}

std::vector<const InferencePair*> lookup(const GoldIndex& gold, const std::vector<std::string>& ids,
                                         const SplitPlan& plan) {
  std::vector<const InferencePair*> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    auto it = gold.find(id);
    if (it == gold.end()) throw JoinError("plan " + plan.name() + ": unknown pair id " + id);
    out.push_back(it->second);
  }
  return out;
}

std::vector<PredictionRecord> predict_plan(Strategy strategy, const SplitPlan& plan,
                                           const GoldIndex& gold, std::uint64_t seed) {
  return builtin_predict(strategy, lookup(gold, plan.train_ids, plan),
                         lookup(gold, required_ids(plan), plan), hash_combine(seed, stable_hash(plan.name())));
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  DatasetConfig config;
  config.generation.seed = a.seed;
  config.generation.max_depth = a.max_depth;
  config.generation.per_depth_quota = a.quota;
  config.train_cap = a.train_cap;
  config.test_cap = a.test_cap;
  config.total_cap = a.train_cap + a.test_cap;
  const Dataset ds = generate_dataset(config);
  write_dataset(a.out, ds, a.compress);
  out << "train: " << ds.train.size() << "\n";
  out << "test: " << ds.test.size() << "\n";
  for (const auto& [depth, n] : ds.manifest.quantifier_combinations) {
    out << "depth " << depth << ": " << n << " quantifier combinations, "
        << ds.manifest.missing_combinations.at(depth) << " missing\n";
  }
  out << "wrote " << a.out << "\n";
  return kExitOk;
}

// Runs `prover <file>`; 0 = theorem, 1 = countersatisfiable, else error.
std::optional<Verdict> run_prover(const std::string& prover, const fs::path& file) {
  const std::string cmd = prover + " '" + file.string() + "' >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return std::nullopt;
  switch (WEXITSTATUS(status)) {
    case 0: return Verdict::kEntailed;
    case 1: return Verdict::kCountermodelFound;
    default: return std::nullopt;
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<InferencePair> sample;
  if (!a.dataset.empty()) {
    std::vector<InferencePair> pool;
    for (auto& p : concat(read_dataset(a.dataset))) {
      if (p.depth <= a.max_depth) pool.push_back(std::move(p));
    }
    sample = stratified_sample(pool, a.sample, a.seed);
  } else {
    GenerationConfig config;
    config.seed = a.seed;
    config.max_depth = a.max_depth;
    config.per_depth_quota = a.quota;
    sample = sample_pairs(config, a.sample);
  }
  const auto results = verify_pairs(sample, a.max_domain,
                                    a.serial ? ExecutionPolicy::kSerial : ExecutionPolicy::kParallel);
  const VerificationSummary summary = summarize(results);

  Json report;
  report["seed"] = a.seed;
  report["max_domain"] = a.max_domain;
  report["max_depth"] = a.max_depth;
  report["source"] = a.dataset.empty() ? "inventory" : a.dataset;
  report["checked"] = summary.checked;
  report["mismatches"] = summary.mismatches;
  report["errors"] = summary.errors;
  std::map<std::string, std::size_t> by_stratum;
  for (const auto& p : sample) ++by_stratum["D" + std::to_string(p.depth) + "/" + std::string(to_string(p.replacement))];
  report["strata"] = by_stratum;
  Json failures = Json::array();
  for (const auto& r : results) {
    if (r.agrees && r.error.empty()) continue;
    Json f;
    f["id"] = r.id;
    f["expected"] = std::string(to_string(r.expected));
    f["verdict"] = std::string(to_string(r.verdict));
    if (!r.error.empty()) f["error"] = r.error;
    failures.push_back(f);
    err << "mismatch " << r.id << ": expected " << to_string(r.expected) << ", oracle "
        << (r.error.empty() ? std::string(to_string(r.verdict)) : r.error) << "\n";
  }
  report["failures"] = failures;

  std::size_t tptp_invalid = 0;
  std::size_t prover_checked = 0;
  std::size_t prover_disagree = 0;
  if (!a.tptp_out.empty()) {
    fs::create_directories(a.tptp_out);
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const std::string text = export_tptp(sample[i]);
      const fs::path file = fs::path(a.tptp_out) / (sample[i].id + ".p");
      write_text(file, text);
      const TptpDiagnostic diag = check_tptp_syntax(text);
      if (!diag.ok) {
        ++tptp_invalid;
        err << file.string() << ":" << diag.line << ":" << diag.column << ": " << diag.message << "\n";
      }
      if (!a.prover.empty()) {
        ++prover_checked;
        const auto v = run_prover(a.prover, file);
        if (!v || *v != results[i].verdict) {
          ++prover_disagree;
          err << "prover disagrees on " << sample[i].id << "\n";
        }
      }
    }
    report["tptp_written"] = sample.size();
    report["tptp_invalid"] = tptp_invalid;
    if (!a.prover.empty()) {
      report["prover_checked"] = prover_checked;
      report["prover_disagreements"] = prover_disagree;
    }
  }
  if (!a.out.empty()) write_text(a.out, report.dump(2) + "\n");

  out << "checked: " << summary.checked << "\n";
  out << "mismatches: " << summary.mismatches << "\n";
  out << "errors: " << summary.errors << "\n";
  if (!a.tptp_out.empty()) out << "tptp invalid: " << tptp_invalid << "\n";
  if (!a.prover.empty()) out << "prover disagreements: " << prover_disagree << "\n";
  const bool ok = summary.mismatches == 0 && summary.errors == 0 && tptp_invalid == 0 &&
                  prover_disagree == 0;
  return ok ? kExitOk : kExitFailure;
}

int cmd_split(const SplitArgs& a, std::ostream& out) {
  const Dataset ds = read_dataset(a.dataset);
  AspectConfig config;
  config.seed = a.seed;
  config.num_runs = a.num_runs;
  config.s = a.s;
  config.validate();

  std::vector<Aspect> aspects;
  if (a.aspect == "all") {
    aspects = {Aspect::kReplacementSystematicity, Aspect::kEmbeddingQuantifiers,
               Aspect::kProductivity, Aspect::kLocalism};
  } else {
    aspects = {aspect_from_string(a.aspect)};
  }
  const std::vector<InferencePair> pool = concat(ds);
  std::vector<SplitPlan> plans;
  for (Aspect aspect : aspects) {
    std::vector<SplitPlan> built;
    switch (aspect) {
      case Aspect::kReplacementSystematicity: built = build_replacement_systematicity(config, pool); break;
      case Aspect::kEmbeddingQuantifiers: built = build_embedding_quantifiers(config, pool); break;
      case Aspect::kProductivity: built = build_productivity(config, ds.train, ds.test); break;
      case Aspect::kLocalism: built = build_localism(config, ds.train, ds.test); break;
    }
    plans.insert(plans.end(), built.begin(), built.end());
  }

  fs::create_directories(a.out);
  Json index;
  index["version"] = std::string(kPlanVersion);
  index["seed"] = a.seed;
  index["dataset_seed"] = ds.manifest.seed;
  index["num_runs"] = a.num_runs;
  index["s"] = a.s;
  Json files = Json::array();
  for (const auto& plan : plans) {
    const std::string file = plan.name() + ".json";
    write_plan(fs::path(a.out) / file, plan);
    files.push_back(file);
    out << plan.name() << ": train " << plan.train_ids.size() << ", test " << plan.test_ids.size()
        << "\n";
  }
  index["plans"] = files;
  const auto variants = materialize_variants(plans, pool);
  if (!variants.empty()) {
    write_jsonl(fs::path(a.out) / kVariantsFile, variants);
    index["variants"] = kVariantsFile;
    out << "variants: " << variants.size() << "\n";
  }
  write_text(fs::path(a.out) / kPlansIndex, index.dump(2) + "\n");
  out << "wrote " << plans.size() << " plans to " << a.out << "\n";
  return kExitOk;
}

int cmd_score(const ScoreArgs& a, std::ostream& out) {
  if (a.strategy.empty() == a.predictions.empty()) {
    throw ConfigError("score needs exactly one of --predictions and --strategy");
  }
  PlanSet set;
  load_plans(set, a.plans, a.dataset, a.variants);

  std::vector<std::vector<PredictionRecord>> predictions;
  if (!a.strategy.empty()) {
    const Strategy strategy = strategy_from_string(a.strategy);
    for (const auto& plan : set.plans) predictions.push_back(predict_plan(strategy, plan, set.gold, a.seed));
  } else if (a.predictions.size() == 1 && fs::is_directory(a.predictions.front())) {
    for (const auto& plan : set.plans) {
      const fs::path p = fs::path(a.predictions.front()) / (plan.name() + ".jsonl");
      if (!fs::exists(p)) throw CoverageError("no prediction file for plan " + plan.name() + " (" + p.string() + ")");
      predictions.push_back(read_predictions(p));
    }
  } else {
    if (a.predictions.size() != set.plans.size()) {
      throw ConfigError(std::to_string(a.predictions.size()) + " prediction files for " +
                        std::to_string(set.plans.size()) + " plans");
    }
    for (const auto& p : a.predictions) predictions.push_back(read_predictions(p));
  }

  std::map<std::pair<Aspect, int>, std::vector<ScoreReport>> by_step;
  for (std::size_t i = 0; i < set.plans.size(); ++i) {
    by_step[{set.plans[i].aspect, set.plans[i].step_index}].push_back(
        score(predictions[i], set.plans[i], set.gold));
  }
  std::map<Aspect, std::vector<ScoreReport>> by_aspect;
  for (const auto& [key, reports] : by_step) by_aspect[key.first].push_back(aggregate_runs(reports));

  std::string csv;
  std::string table;
  for (const auto& [aspect, reports] : by_aspect) {
    std::string c = render_csv(reports);
    if (!csv.empty()) c.erase(0, c.find('\n') + 1);
    csv += c;
    if (!table.empty()) table += "\n";
    table += render_table(reports);
  }
  out << table;
  if (!a.out.empty()) {
    fs::create_directories(a.out);
    write_text(fs::path(a.out) / "scores.csv", csv);
    write_text(fs::path(a.out) / "scores.txt", table);
  }
  return kExitOk;
}

int cmd_baseline(const BaselineArgs& a, std::ostream& out) {
  const Strategy strategy = strategy_from_string(a.strategy);
  PlanSet set;
  load_plans(set, a.plans, a.dataset, a.variants);
  fs::create_directories(a.out);
  Json manifest;
  manifest["strategy"] = std::string(to_string(strategy));
  manifest["seed"] = a.seed;
  Json files = Json::array();
  for (const auto& plan : set.plans) {
    const std::string file = plan.name() + ".jsonl";
    const auto predictions = predict_plan(strategy, plan, set.gold, a.seed);
    write_predictions(fs::path(a.out) / file, predictions);
    files.push_back(file);
  }
  manifest["predictions"] = files;
  write_text(fs::path(a.out) / "manifest.json", manifest.dump(2) + "\n");
  out << "wrote " << set.plans.size() << " prediction files to " << a.out << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monotonicity inference dataset toolkit", "monogen"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "monogen 1.0.0");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate a balanced, capped dataset");
  g->add_option("--seed", gen.seed, "Generation seed")->required();
  g->add_option("--max-depth", gen.max_depth, "Deepest embedding depth")->capture_default_str();
  g->add_option("--quota", gen.quota, "Premises per sampled depth")->capture_default_str();
  g->add_option("--train-cap", gen.train_cap)->capture_default_str();
  g->add_option("--test-cap", gen.test_cap)->capture_default_str();
  g->add_flag("--compress", gen.compress, "Write .jsonl.gz");
  g->add_option("--out", gen.out, "Output directory")->required();

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check labels against the finite-model oracle");
  v->add_option("--seed", ver.seed)->capture_default_str();
  v->add_option("--sample", ver.sample, "Pairs to check")->capture_default_str();
  v->add_option("--max-domain", ver.max_domain)->capture_default_str();
  v->add_option("--max-depth", ver.max_depth)->capture_default_str();
  v->add_option("--quota", ver.quota, "Premises per sampled depth")->capture_default_str();
  v->add_option("--dataset", ver.dataset, "Sample from a generated dataset")->check(CLI::ExistingDirectory);
  v->add_option("--tptp-out", ver.tptp_out, "Write one TPTP problem per pair");
  v->add_option("--prover", ver.prover, "Prover wrapper command (needs --tptp-out)")->needs("--tptp-out");
  v->add_option("--out", ver.out, "JSON report path");
  v->add_flag("--serial", ver.serial, "Single-threaded oracle");

  SplitArgs spl;
  auto* s = app.add_subcommand("split", "Build split plans for the four aspects");
  s->add_option("--dataset", spl.dataset)->required()->check(CLI::ExistingDirectory);
  s->add_option("--aspect", spl.aspect, "An aspect name or 'all'")->capture_default_str();
  s->add_option("--num-runs", spl.num_runs)->capture_default_str();
  s->add_option("--seed", spl.seed)->required();
  s->add_option("--max-depth", spl.s, "Deepest depth used by productivity and localism")->capture_default_str();
  s->add_option("--out", spl.out)->required();

  ScoreArgs sco;
  auto* c = app.add_subcommand("score", "Score predictions against split plans");
  c->add_option("--plan", sco.plans, "Plan file or directory")->required()->check(CLI::ExistingPath);
  c->add_option("--predictions", sco.predictions, "Prediction file per plan, or a directory")
      ->check(CLI::ExistingPath);
  c->add_option("--strategy", sco.strategy, "Builtin predictor instead of prediction files");
  c->add_option("--dataset", sco.dataset)->required()->check(CLI::ExistingDirectory);
  c->add_option("--variants", sco.variants)->check(CLI::ExistingFile);
  c->add_option("--seed", sco.seed, "Seed for --strategy random")->capture_default_str();
  c->add_option("--out", sco.out, "Directory for scores.csv and scores.txt");

  BaselineArgs bas;
  auto* b = app.add_subcommand("baseline", "Write predictions from a builtin strategy");
  b->add_option("--strategy", bas.strategy)->required();
  b->add_option("--plan", bas.plans, "Plan file or directory")->required()->check(CLI::ExistingPath);
  b->add_option("--dataset", bas.dataset)->required()->check(CLI::ExistingDirectory);
  b->add_option("--variants", bas.variants)->check(CLI::ExistingFile);
  b->add_option("--seed", bas.seed)->required();
  b->add_option("--out", bas.out)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*g) return cmd_generate(gen, out);
    if (*v) return cmd_verify(ver, out, err);
    if (*s) return cmd_split(spl, out);
    if (*c) return cmd_score(sco, out);
    if (*b) return cmd_baseline(bas, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace monogen
