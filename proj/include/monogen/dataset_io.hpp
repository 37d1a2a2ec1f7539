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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "monogen/replacement.hpp"

namespace monogen {

inline constexpr std::string_view kJsonlSchema = "monogen-jsonl/1";

// Whole-file text I/O; paths ending in ".gz" are gzip-compressed.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// One compact JSON object, fields in schema order, no trailing newline.
std::string to_json_line(const InferencePair& pair);

// Strict decoding: every schema field required, unknown fields rejected.
// `line_no` is used in error messages.
InferencePair from_json_line(std::string_view line, std::size_t line_no = 1);

void write_jsonl(const std::filesystem::path& path, const std::vector<InferencePair>& pairs);
std::vector<InferencePair> read_jsonl(const std::filesystem::path& path);

// Splits text into lines, dropping a final empty line.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace monogen
