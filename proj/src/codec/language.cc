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

#include "arnn/codec/language.h"

#include <algorithm>
#include <fstream>

#include "arnn/error.h"
#include "arnn/util/text.h"

namespace arnn {
namespace {

char single_symbol(const std::string& param, const Alphabet& alphabet) {
  if (param.size() != 1) {
    fail(ErrorCode::kParseError, "expected one symbol, got '" + param + "'");
  }
  alphabet.rank(param[0]);
  return param[0];
}

void expect_params(const std::string& rule,
                   const std::vector<std::string>& params, std::size_t n) {
  if (params.size() != n) {
    fail(ErrorCode::kParseError, "rule " + rule + " takes " +
                                     std::to_string(n) + " parameter(s)");
  }
}

}  // namespace

Language Language::finite(Alphabet alphabet, std::set<std::string> members) {
  for (const auto& m : members) alphabet.check_word(m);
  std::string descriptor = "finite(" + std::to_string(members.size()) + ")";
  auto table = std::make_shared<const std::set<std::string>>(std::move(members));
  return Language(std::move(alphabet), std::move(descriptor),
                  [table](std::string_view w) -> std::optional<bool> {
                    return table->count(std::string(w)) > 0;
                  });
}

Language Language::predicate(Alphabet alphabet, std::string descriptor,
                             Decider decide) {
  return Language(std::move(alphabet), std::move(descriptor),
                  std::move(decide));
}

Language Language::all(Alphabet alphabet) {
  return predicate(std::move(alphabet), "all",
                   [](std::string_view) -> std::optional<bool> { return true; });
}

Language Language::builtin(Alphabet alphabet, const std::string& rule,
                           const std::vector<std::string>& params) {
  std::string descriptor = rule;
  for (const auto& p : params) descriptor += " " + p;

  if (rule == "parity") {
    expect_params(rule, params, 1);
    char s = single_symbol(params[0], alphabet);
    return predicate(std::move(alphabet), descriptor,
                     [s](std::string_view w) -> std::optional<bool> {
                       return std::count(w.begin(), w.end(), s) % 2 == 0;
                     });
  }
  if (rule == "anbn") {
    expect_params(rule, params, 2);
    char a = single_symbol(params[0], alphabet);
    char b = single_symbol(params[1], alphabet);
    return predicate(std::move(alphabet), descriptor,
                     [a, b](std::string_view w) -> std::optional<bool> {
                       std::size_t n = w.size() / 2;
                       if (w.size() % 2 != 0) return false;
                       for (std::size_t i = 0; i < n; ++i) {
                         if (w[i] != a || w[n + i] != b) return false;
                       }
                       return true;
                     });
  }
  if (rule == "prefix") {
    expect_params(rule, params, 1);
    alphabet.check_word(params[0]);
    std::string p = params[0];
    return predicate(std::move(alphabet), descriptor,
                     [p](std::string_view w) -> std::optional<bool> {
                       return w.substr(0, p.size()) == p;
                     });
  }
  if (rule == "lead") {
    expect_params(rule, params, 2);
    char x = single_symbol(params[0], alphabet);
    char y = single_symbol(params[1], alphabet);
    return predicate(std::move(alphabet), descriptor,
                     [x, y](std::string_view w) -> std::optional<bool> {
                       if (w.empty() || w[0] != x) return false;
                       return std::all_of(w.begin() + 1, w.end(),
                                          [y](char c) { return c == y; });
                     });
  }
  fail(ErrorCode::kParseError, "unknown language rule '" + rule + "'");
}

Language Language::real_code(Alphabet alphabet, UnitReal code) {
  if (code.base() != 2) {
    fail(ErrorCode::kEncodingError, "language codes are binary expansions");
  }
  Alphabet copy = alphabet;
  return predicate(std::move(alphabet), "real-code",
                   [code, copy](std::string_view w) -> std::optional<bool> {
                     return decode_membership(code, w, copy) == 1;
                   });
}

bool Language::contains(std::string_view word) const {
  alphabet_.check_word(word);
  std::optional<bool> verdict = decide_(word);
  if (!verdict) {
    fail(ErrorCode::kMembershipUndecided,
         "rule " + descriptor_ + " did not decide '" + std::string(word) + "'");
  }
  return *verdict;
}

Language Language::parse(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::set<std::string> members;
  std::optional<std::vector<std::string>> rule;
  for (const auto& record : read_records(in)) {
    const auto& f = record.fields;
    const std::string where = "line " + std::to_string(record.number) + ": ";
    if (f[0] == "alphabet:" && f.size() == 2) {
      alphabet.emplace(f[1]);
    } else if (f[0] == "member:" && f.size() <= 2) {
      members.insert(f.size() == 2 ? f[1] : std::string());
    } else if (f[0] == "rule:" && f.size() >= 2) {
      if (rule) fail(ErrorCode::kParseError, where + "second rule line");
      rule.emplace(f.begin() + 1, f.end());
    } else {
      fail(ErrorCode::kParseError, where + "unrecognized language record");
    }
  }
  if (!alphabet) fail(ErrorCode::kParseError, "language has no alphabet line");
  if (rule && !members.empty()) {
    fail(ErrorCode::kParseError, "language mixes member and rule lines");
  }
  if (rule) {
    std::vector<std::string> params(rule->begin() + 1, rule->end());
    return builtin(*alphabet, rule->front(), params);
  }
  return finite(*alphabet, std::move(members));
}

Language Language::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open language file " + path);
  return parse(in);
}

UnitReal encode_language(const Language& language, std::size_t n) {
  std::vector<int> digits;
  digits.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    digits.push_back(
        language.contains(string_of_index(k, language.alphabet())) ? 1 : 0);
  }
  return UnitReal::from_digits(2, std::move(digits));
}

int decode_membership(const UnitReal& code, std::string_view word,
                      const Alphabet& alphabet) {
  std::size_t index = index_of_string(word, alphabet);
  if (code.horizon() && index > *code.horizon()) {
    fail(ErrorCode::kHorizonExceeded,
         "string '" + std::string(word) + "' has index " +
             std::to_string(index) + ", code horizon is " +
             std::to_string(*code.horizon()));
  }
  return code.digit_at(index);
}

}  // namespace arnn
