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
#include <string>
#include <string_view>

namespace arnn {

// Ordered set of single-character symbols. The order fixes the
// lexicographic rank used by the string index.
class Alphabet {
 public:
  // Nonempty, no duplicates; AlphabetError otherwise.
  explicit Alphabet(std::string symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char symbol(std::size_t rank) const { return symbols_.at(rank); }
  bool contains(char c) const {
    return symbols_.find(c) != std::string::npos;
  }
  // AlphabetError for symbols outside the alphabet.
  std::size_t rank(char c) const;
  void check_word(std::string_view word) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

// Length-then-lexicographic rank, 1-based: epsilon -> 1, a -> 2, b -> 3,
// aa -> 4, ... For |alphabet| = k this is bijective base-k numeration plus
// one. ConfigError if the index does not fit in std::size_t.
std::size_t index_of_string(std::string_view word, const Alphabet& alphabet);

// Inverse of index_of_string; index >= 1.
std::string string_of_index(std::size_t index, const Alphabet& alphabet);

}  // namespace arnn
