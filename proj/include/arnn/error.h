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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arnn {

enum class ErrorCode {
  kHorizonExceeded,
  kUnknownSign,
  kShapeError,
  kAlphabetError,
  kMembershipUndecided,
  kEncodingError,
  kConfigError,
  kConstructionError,
  kLatticeError,
  kLabelMissing,
  kTimeout,
  kParseError,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library. The code names the error case; the
// neuron index is set when the failure is attributable to one neuron.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> neuron = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> neuron() const { return neuron_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> neuron_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace arnn
