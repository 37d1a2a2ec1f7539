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

#include <stdexcept>
#include <string>

namespace monogen {

// Errors caused by bad input (configuration, data files, coverage). The CLI
// maps these to exit code 2; everything else is an internal error.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SchemaError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CoverageError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BalanceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class JoinError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class AggregationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedVariantError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TranslationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monogen
