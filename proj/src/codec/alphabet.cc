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

#include "arnn/codec/alphabet.h"

#include <algorithm>
#include <limits>

#include "arnn/error.h"

namespace arnn {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) fail(ErrorCode::kAlphabetError, "empty alphabet");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
      fail(ErrorCode::kAlphabetError,
           std::string("duplicate symbol '") + symbols_[i] + "'");
    }
  }
}

std::size_t Alphabet::rank(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) {
    fail(ErrorCode::kAlphabetError, std::string("symbol '") + c +
                                        "' is not in alphabet {" + symbols_ +
                                        "}");
  }
  return pos;
}

void Alphabet::check_word(std::string_view word) const {
  for (char c : word) rank(c);
}

std::size_t index_of_string(std::string_view word, const Alphabet& alphabet) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  const std::size_t k = alphabet.size();
  std::size_t value = 0;
  for (char c : word) {
    std::size_t digit = alphabet.rank(c) + 1;
    if (value > (kMax - digit) / k) {
      fail(ErrorCode::kConfigError,
           "string index of '" + std::string(word) + "' overflows");
    }
    value = value * k + digit;
  }
  if (value == kMax) {
    fail(ErrorCode::kConfigError,
         "string index of '" + std::string(word) + "' overflows");
  }
  return value + 1;
}

std::string string_of_index(std::size_t index, const Alphabet& alphabet) {
  if (index == 0) fail(ErrorCode::kConfigError, "string indices start at 1");
  const std::size_t k = alphabet.size();
  std::size_t value = index - 1;
  std::string word;
  while (value > 0) {
    std::size_t digit = (value - 1) % k;
    word.push_back(alphabet.symbol(digit));
    value = (value - 1) / k;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace arnn
