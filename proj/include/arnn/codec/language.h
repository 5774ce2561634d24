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
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arnn/codec/alphabet.h"
#include "arnn/numerics/unit_real.h"

namespace arnn {

// A membership predicate over the strings of an alphabet.
class Language {
 public:
  // Returns nullopt when the rule cannot decide within its own budget.
  using Decider = std::function<std::optional<bool>(std::string_view)>;

  static Language finite(Alphabet alphabet, std::set<std::string> members);
  static Language predicate(Alphabet alphabet, std::string descriptor,
                            Decider decide);
  // Built-in rules:
  //   parity <s>     even number of s
  //   anbn <a> <b>   a^n b^n, n >= 0
  //   prefix <p>     strings starting with p
  //   lead <x> <y>   x followed by any number of y
  static Language builtin(Alphabet alphabet, const std::string& rule,
                          const std::vector<std::string>& params);
  // Membership read off a binary characteristic real.
  static Language real_code(Alphabet alphabet, UnitReal code);

  static Language empty(Alphabet alphabet) {
    return finite(std::move(alphabet), {});
  }
  static Language all(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& descriptor() const { return descriptor_; }

  // AlphabetError for foreign symbols, MembershipUndecided when the rule
  // gives up, HorizonExceeded past a truncated real code.
  bool contains(std::string_view word) const;

  // File form: "alphabet: ab" followed by "member: <s>" lines or a single
  // "rule: <name> <params>" line.
  static Language parse(std::istream& in);
  static Language load(const std::string& path);

 private:
  Language(Alphabet alphabet, std::string descriptor, Decider decide)
      : alphabet_(std::move(alphabet)),
        descriptor_(std::move(descriptor)),
        decide_(std::move(decide)) {}

  Alphabet alphabet_;
  std::string descriptor_;
  Decider decide_;
};

// First n binary digits of r_L: digit k is 1 iff string_of_index(k) is in L.
// The result is a finite expansion with horizon n.
UnitReal encode_language(const Language& language, std::size_t n);

// Digit index_of_string(word) of the code. HorizonExceeded when the code is
// finite and the index lies past its horizon.
int decode_membership(const UnitReal& code, std::string_view word,
                      const Alphabet& alphabet);

}  // namespace arnn
