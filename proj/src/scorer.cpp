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

#include "monogen/scorer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "monogen/dataset_io.hpp"
#include "monogen/errors.hpp"
#include "monogen/rng.hpp"
#include "monogen/sentence.hpp"

namespace monogen {
namespace {

using Json = nlohmann::ordered_json;

std::string id_list(const std::vector<std::string>& ids) {
  std::string out;
  const std::size_t shown = std::min<std::size_t>(ids.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  if (ids.size() > shown) out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out;
}

std::string fixed1(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

std::string chance_note(double mean) {
  const std::string m = fixed1(mean);
  if (m == "50.0") return "chance";
  return mean < 50.0 ? "below" : "above";
}

std::set<std::string> word_set(std::string_view sentence) {
  std::set<std::string> out;
  for (auto& tok : tokenize(sentence)) {
    if (tok == "," || tok == ".") continue;
    std::transform(tok.begin(), tok.end(), tok.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    out.insert(tok);
  }
  return out;
}

}  // namespace

std::vector<PredictionRecord> read_predictions(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  std::vector<PredictionRecord> out;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(where + ": malformed JSON: " + e.what());
    }
    if (!j.is_object()) throw SchemaError(where + ": prediction is not an object");
    for (const auto& [key, value] : j.items()) {
      if (key != "id" && key != "label") {
        throw SchemaError(where + ": unknown field '" + key + "' in prediction record");
      }
    }
    if (!j.contains("id") || !j["id"].is_string() || !j.contains("label") ||
        !j["label"].is_string()) {
      throw SchemaError(where + ": prediction needs string fields 'id' and 'label'");
    }
    PredictionRecord r;
    r.id = j["id"].get<std::string>();
    try {
      r.label = label_from_string(j["label"].get<std::string>());
    } catch (const ValidationError& e) {
      throw SchemaError(where + ": " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

void write_predictions(const std::filesystem::path& path,
                       const std::vector<PredictionRecord>& predictions) {
  std::string text;
  for (const auto& p : predictions) {
    Json j;
    j["id"] = p.id;
    j["label"] = std::string(to_string(p.label));
    text += j.dump();
    text += '\n';
  }
  write_text(path, text);
}

GoldIndex index_pairs(const std::vector<const std::vector<InferencePair>*>& sources) {
  GoldIndex index;
  for (const auto* src : sources) {
    for (const auto& p : *src) {
      if (!index.emplace(p.id, &p).second) throw JoinError("duplicate pair id " + p.id);
    }
  }
  return index;
}

std::vector<std::string> required_ids(const SplitPlan& plan) {
  std::vector<std::string> ids = plan.test_ids;
  for (const auto& [v, vids] : plan.variant_test_ids) ids.insert(ids.end(), vids.begin(), vids.end());
  return ids;
}

ScoreReport score(const std::vector<PredictionRecord>& predictions, const SplitPlan& plan,
                  const GoldIndex& gold) {
  const auto required = required_ids(plan);
  const std::set<std::string_view> wanted(required.begin(), required.end());
  std::unordered_map<std::string_view, Label> predicted;
  std::vector<std::string> unknown;
  for (const auto& p : predictions) {
    if (!wanted.count(p.id)) {
      unknown.push_back(p.id);
      continue;
    }
    if (!predicted.emplace(p.id, p.label).second) {
      throw JoinError("plan " + plan.name() + ": duplicate prediction for " + p.id);
    }
  }
  if (!unknown.empty()) {
    throw JoinError("plan " + plan.name() + ": predictions for ids outside the test set: " +
                    id_list(unknown));
  }
  std::vector<std::string> missing;
  for (const auto& id : required) {
    if (!predicted.count(id)) missing.push_back(id);
  }
  if (!missing.empty()) {
    throw CoverageError("plan " + plan.name() + ": no prediction for " + id_list(missing));
  }
  std::vector<std::string> no_gold;
  for (const auto& id : required) {
    if (!gold.count(id)) no_gold.push_back(id);
  }
  if (!no_gold.empty()) {
    throw JoinError("plan " + plan.name() + ": ids missing from the gold data: " + id_list(no_gold));
  }

  auto accuracy = [&](const std::vector<std::string>& ids) {
    GroupScore g;
    g.n = ids.size();
    std::size_t correct = 0;
    for (const auto& id : ids) correct += predicted.at(id) == gold.at(id)->label ? 1 : 0;
    g.mean = ids.empty() ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(ids.size());
    return g;
  };
  ScoreReport report;
  report.aspect = plan.aspect;
  report.step_index = plan.step_index;
  for (const auto& [name, ids] : plan.test_groups) report.groups[name] = accuracy(ids);
  for (const auto& [v, ids] : plan.variant_test_ids) {
    report.groups["variant/" + std::string(to_string(v))] = accuracy(ids);
  }
  return report;
}

ScoreReport aggregate_runs(const std::vector<ScoreReport>& reports) {
  if (reports.empty()) throw AggregationError("no reports to aggregate");
  const ScoreReport& first = reports.front();
  for (const auto& r : reports) {
    if (r.aspect != first.aspect || r.step_index != first.step_index) {
      throw AggregationError("reports mix aspects or steps");
    }
    if (r.groups.size() != first.groups.size() ||
        !std::equal(r.groups.begin(), r.groups.end(), first.groups.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
      throw AggregationError("reports for " + std::string(to_string(first.aspect)) + " step " +
                             std::to_string(first.step_index) + " have different group keys");
    }
  }
  ScoreReport out;
  out.aspect = first.aspect;
  out.step_index = first.step_index;
  out.runs = 0;
  for (const auto& r : reports) out.runs += r.runs;
  for (const auto& [name, g0] : first.groups) {
    double sum = 0.0;
    for (const auto& r : reports) sum += r.groups.at(name).mean;
    const double mean = sum / static_cast<double>(reports.size());
    double var = 0.0;
    for (const auto& r : reports) {
      const double d = r.groups.at(name).mean - mean;
      var += d * d;
    }
    GroupScore g;
    g.mean = mean;
    g.stddev = std::sqrt(var / static_cast<double>(reports.size()));
    g.n = g0.n;
    out.groups[name] = g;
  }
  return out;
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kMajority: return "majority";
    case Strategy::kRandom: return "random";
    case Strategy::kLexicalOverlap: return "lexical_overlap";
  }
  return "?";
}

Strategy strategy_from_string(std::string_view s) {
  for (auto v : {Strategy::kMajority, Strategy::kRandom, Strategy::kLexicalOverlap}) {
    if (to_string(v) == s) return v;
  }
  throw ConfigError("unknown strategy '" + std::string(s) + "'");
}

Label lexical_overlap_label(const InferencePair& pair) {
  const auto premise = word_set(pair.premise);
  for (const auto& w : word_set(pair.hypothesis)) {
    if (!premise.count(w)) return Label::kNonEntailment;
  }
  return Label::kEntailment;
}

std::vector<PredictionRecord> builtin_predict(Strategy strategy,
                                              const std::vector<const InferencePair*>& train,
                                              const std::vector<const InferencePair*>& test,
                                              std::uint64_t seed) {
  std::vector<PredictionRecord> out;
  out.reserve(test.size());
  Label majority = Label::kEntailment;
  if (strategy == Strategy::kMajority) {
    std::size_t ent = 0;
    for (const auto* p : train) ent += p->label == Label::kEntailment ? 1 : 0;
    if (train.size() - ent > ent) majority = Label::kNonEntailment;
  }
  for (const auto* p : test) {
    Label l = majority;
    if (strategy == Strategy::kRandom) {
      l = (hash_combine(seed, stable_hash(p->id)) & 1) ? Label::kEntailment : Label::kNonEntailment;
    } else if (strategy == Strategy::kLexicalOverlap) {
      l = lexical_overlap_label(*p);
    }
    out.push_back({p->id, l});
  }
  return out;
}

std::string train_set_label(Aspect aspect, int step_index) {
  switch (aspect) {
    case Aspect::kReplacementSystematicity: return "S_" + std::to_string(step_index + 1);
    case Aspect::kEmbeddingQuantifiers: return "S_" + std::to_string(step_index);
    case Aspect::kProductivity: {
      std::string s;
      for (int d = 1; d <= step_index + 1; ++d) s += (d > 1 ? "+D" : "D") + std::to_string(d);
      return s;
    }
    case Aspect::kLocalism: return "D" + std::to_string(step_index);
  }
  return "?";
}

std::string render_csv(const std::vector<ScoreReport>& reports) {
  std::ostringstream out;
  out << "aspect,train_set,group,mean,stddev,n,runs,chance\n";
  for (const auto& r : reports) {
    for (const auto& [name, g] : r.groups) {
      out << to_string(r.aspect) << ',' << train_set_label(r.aspect, r.step_index) << ',' << name
          << ',' << fixed1(g.mean) << ',' << fixed1(g.stddev) << ',' << g.n << ',' << r.runs
          << ',' << chance_note(g.mean) << '\n';
    }
  }
  return out.str();
}

std::string render_table(const std::vector<ScoreReport>& reports) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"train set", "test group", "accuracy", "n", "vs chance"});
  for (const auto& r : reports) {
    for (const auto& [name, g] : r.groups) {
      rows.push_back({train_set_label(r.aspect, r.step_index), name,
                      fixed1(g.mean) + "±" + fixed1(g.stddev), std::to_string(g.n),
                      chance_note(g.mean)});
    }
  }
  // "±" is two bytes but one column.
  auto width = [](const std::string& s) {
    return s.size() - static_cast<std::size_t>(std::count(s.begin(), s.end(), '\xc2'));
  };
  std::array<std::size_t, 5> w{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], width(row[c]));
  }
  std::ostringstream out;
  if (!reports.empty()) out << to_string(reports.front().aspect) << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const bool right = c == 2 || c == 3;
      const std::string pad(w[c] - width(row[c]), ' ');
      out << (right ? pad + row[c] : row[c] + (c + 1 < row.size() ? pad : ""));
      if (c + 1 < row.size()) out << "  ";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace monogen
