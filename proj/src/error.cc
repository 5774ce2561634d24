// Copyright 2026 The ARNN Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arnn/error.h"

namespace arnn {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kHorizonExceeded: return "HorizonExceeded";
    case ErrorCode::kUnknownSign: return "UnknownSign";
    case ErrorCode::kShapeError: return "ShapeError";
    case ErrorCode::kAlphabetError: return "AlphabetError";
    case ErrorCode::kMembershipUndecided: return "MembershipUndecided";
    case ErrorCode::kEncodingError: return "EncodingError";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kConstructionError: return "ConstructionError";
    case ErrorCode::kLatticeError: return "LatticeError";
    case ErrorCode::kLabelMissing: return "LabelMissing";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> neuron)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      neuron_(neuron) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace arnn
