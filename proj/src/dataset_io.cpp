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

#include "monogen/dataset_io.hpp"

#include <zlib.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "monogen/errors.hpp"

namespace monogen {
namespace {

using Json = nlohmann::ordered_json;

bool gzipped(const std::filesystem::path& path) { return path.extension() == ".gz"; }

const std::vector<std::string>& schema_fields() {
  static const std::vector<std::string> fields = {
      "id",         "premise",        "hypothesis",      "label",
      "depth",      "quantifiers",    "replacement",     "target_argument",
      "target_polarity", "structure_variant", "run_seed"};
  return fields;
}

[[noreturn]] void schema_fail(std::size_t line_no, const std::string& msg) {
  throw SchemaError("line " + std::to_string(line_no) + ": " + msg + " (schema " +
                    std::string(kJsonlSchema) + ")");
}

const Json& field(const Json& obj, const char* name, std::size_t line_no) {
  auto it = obj.find(name);
  if (it == obj.end()) schema_fail(line_no, std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const Json& obj, const char* name, std::size_t line_no) {
  const Json& v = field(obj, name, line_no);
  if (!v.is_string()) schema_fail(line_no, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

template <typename F>
auto decode_enum(const Json& obj, const char* name, std::size_t line_no, F from_string) {
  const std::string s = string_field(obj, name, line_no);
  try {
    return from_string(s);
  } catch (const ValidationError& e) {
    schema_fail(line_no, std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  if (gzipped(path)) {
    gzFile f = gzopen(path.string().c_str(), "rb");
    if (f == nullptr) throw ConfigError("cannot open " + path.string());
    std::string out;
    char buf[1 << 16];
    int n;
    while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
    const bool failed = n < 0;
    gzclose(f);
    if (failed) throw ParseError("corrupt gzip stream in " + path.string());
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  if (gzipped(path)) {
    gzFile f = gzopen(path.string().c_str(), "wb9");
    if (f == nullptr) throw std::runtime_error("cannot write " + path.string());
    std::size_t done = 0;
    while (done < text.size()) {
      const auto chunk = static_cast<unsigned>(std::min<std::size_t>(text.size() - done, 1u << 20));
      if (gzwrite(f, text.data() + done, chunk) != static_cast<int>(chunk)) {
        gzclose(f);
        throw std::runtime_error("gzip write failed for " + path.string());
      }
      done += chunk;
    }
    gzclose(f);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string to_json_line(const InferencePair& p) {
  Json j;
  j["id"] = p.id;
  j["premise"] = p.premise;
  j["hypothesis"] = p.hypothesis;
  j["label"] = std::string(to_string(p.label));
  j["depth"] = p.depth;
  j["quantifiers"] = p.quantifiers;
  j["replacement"] = std::string(to_string(p.replacement));
  j["target_argument"] = std::string(to_string(p.target_argument));
  j["target_polarity"] = std::string(to_string(p.target_polarity));
  j["structure_variant"] = std::string(to_string(p.structure_variant));
  j["run_seed"] = p.run_seed;
  return j.dump(-1, ' ', false, Json::error_handler_t::strict);
}

InferencePair from_json_line(std::string_view line, std::size_t line_no) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) schema_fail(line_no, "record is not an object");
  static const std::set<std::string> known(schema_fields().begin(), schema_fields().end());
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) schema_fail(line_no, "unknown field '" + key + "'");
  }
  InferencePair p;
  p.id = string_field(j, "id", line_no);
  p.premise = string_field(j, "premise", line_no);
  p.hypothesis = string_field(j, "hypothesis", line_no);
  p.label = decode_enum(j, "label", line_no, label_from_string);
  const Json& depth = field(j, "depth", line_no);
  if (!depth.is_number_integer() || depth.get<long long>() < 1) {
    schema_fail(line_no, "field 'depth' must be a positive integer");
  }
  p.depth = depth.get<int>();
  const Json& qs = field(j, "quantifiers", line_no);
  if (!qs.is_array()) schema_fail(line_no, "field 'quantifiers' must be an array");
  for (const auto& q : qs) {
    if (!q.is_string()) schema_fail(line_no, "field 'quantifiers' must hold strings");
    p.quantifiers.push_back(q.get<std::string>());
  }
  p.replacement = decode_enum(j, "replacement", line_no, replacement_from_string);
  p.target_argument = decode_enum(j, "target_argument", line_no, argument_from_string);
  p.target_polarity = decode_enum(j, "target_polarity", line_no, [](std::string_view s) {
    if (s != "upward" && s != "downward") {
      throw ParseError("unknown direction '" + std::string(s) + "'");
    }
    return direction_from_string(s);
  });
  p.structure_variant =
      decode_enum(j, "structure_variant", line_no, structure_variant_from_string);
  const Json& seed = field(j, "run_seed", line_no);
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    schema_fail(line_no, "field 'run_seed' must be a non-negative integer");
  }
  p.run_seed = seed.get<std::uint64_t>();
  return p;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<InferencePair>& pairs) {
  std::string text;
  for (const auto& p : pairs) {
    text += to_json_line(p);
    text += '\n';
  }
  write_text(path, text);
}

std::vector<InferencePair> read_jsonl(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  std::vector<InferencePair> out;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.push_back(from_json_line(line, line_no));
  }
  return out;
}

}  // namespace monogen
