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

#include "zxbicat/error.hpp"

namespace zxbicat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::IllegalEdge: return "IllegalEdge";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::DanglingCondition: return "DanglingCondition";
    case ErrorCode::BoundaryViolation: return "BoundaryViolation";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ArityUnsupported: return "ArityUnsupported";
    case ErrorCode::NotOpenNode: return "NotOpenNode";
    case ErrorCode::MiddleMismatch: return "MiddleMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonWireOpenNode: return "NonWireOpenNode";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::RuleInapplicable: return "RuleInapplicable";
    case ErrorCode::InvalidJson: return "InvalidJson";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

}  // namespace zxbicat
