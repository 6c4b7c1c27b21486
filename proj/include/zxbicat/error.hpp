// Copyright 2026 The zxbicat Authors
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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zxbicat {

enum class ErrorCode {
  InvalidArgument,
  InvalidGraph,
  IllegalEdge,
  InvalidMorphism,
  LabelClash,
  DanglingCondition,
  BoundaryViolation,
  ArityMismatch,
  ArityUnsupported,
  NotOpenNode,
  MiddleMismatch,
  SyntaxError,
  NonWireOpenNode,
  ShapeMismatch,
  UnknownRule,
  RuleInapplicable,
  InvalidJson,
  NotFound,
};

std::string_view to_string(ErrorCode code);

/// Exception type thrown by every engine operation.
///
/// Parse errors additionally carry a 1-based line/column position.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, int line, int column)
      : std::runtime_error(message),
        code_(code),
        line_(line),
        column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> line() const noexcept { return line_; }
  std::optional<int> column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::optional<int> line_;
  std::optional<int> column_;
};

}  // namespace zxbicat
