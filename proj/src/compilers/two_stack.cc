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

#include "arnn/compilers/two_stack.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include "arnn/error.h"
#include "arnn/util/text.h"

namespace arnn {

namespace {

bool valid_pop(char c) {
  return c == '-' || c == '0' || c == '1' || c == 'e';
}

bool valid_push(char c) { return c == '-' || c == '0' || c == '1'; }

StackProgram::Test test_of(char c) {
  switch (c) {
    case '0':
      return StackProgram::Test::kZero;
    case '1':
      return StackProgram::Test::kOne;
    case 'e':
      return StackProgram::Test::kEmpty;
    default:
      return StackProgram::Test::kAny;
  }
}

StackProgram::Push push_of(char c) {
  switch (c) {
    case '0':
      return StackProgram::Push::kZero;
    case '1':
      return StackProgram::Push::kOne;
    default:
      return StackProgram::Push::kNone;
  }
}

std::string sorted_symbols(std::string symbols) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return symbols;
}

}  // namespace

TwoStackMachine::TwoStackMachine(Alphabet alphabet,
                                 std::vector<std::string> states,
                                 std::string start,
                                 std::set<std::string> accepting,
                                 std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      start_(std::move(start)),
      accepting_(std::move(accepting)),
      rules_(std::move(rules)) {
  auto known = [&](const std::string& q) {
    return std::find(states_.begin(), states_.end(), q) != states_.end();
  };
  if (!known(start_)) {
    fail(ErrorCode::kConstructionError, "unknown start state " + start_);
  }
  for (const auto& q : accepting_) {
    if (!known(q)) fail(ErrorCode::kConstructionError, "unknown state " + q);
  }
  for (const auto& rule : rules_) {
    if (!known(rule.from) || !known(rule.to)) {
      fail(ErrorCode::kConstructionError, "rule names an unknown state");
    }
    if (rule.read != '-' && rule.read != '$' &&
        !alphabet_.contains(rule.read)) {
      fail(ErrorCode::kConstructionError,
           std::string("rule reads unknown symbol ") + rule.read);
    }
    for (int s = 0; s < 2; ++s) {
      if (!valid_pop(rule.pop[s]) || !valid_push(rule.push[s])) {
        fail(ErrorCode::kConstructionError, "bad stack operation in rule");
      }
    }
  }
}

TwoStackMachine TwoStackMachine::parse(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::vector<std::string> states;
  std::optional<std::string> start;
  std::set<std::string> accepting;
  std::vector<Rule> rules;
  auto declare = [&](const std::string& q) {
    if (std::find(states.begin(), states.end(), q) == states.end()) {
      states.push_back(q);
    }
  };
  for (const auto& record : read_records(in)) {
    const auto& f = record.fields;
    const std::string where = "line " + std::to_string(record.number) + ": ";
    if (f[0] == "alphabet" && f.size() == 2) {
      alphabet.emplace(f[1]);
    } else if (f[0] == "state" && f.size() >= 2 && f.size() <= 4) {
      declare(f[1]);
      for (std::size_t i = 2; i < f.size(); ++i) {
        if (f[i] == "accept") {
          accepting.insert(f[1]);
        } else if (f[i] == "start" && !start) {
          start = f[1];
        } else {
          fail(ErrorCode::kParseError, where + "bad state attribute " + f[i]);
        }
      }
    } else if (f[0] == "rule" && f.size() == 9 && f[5] == "->") {
      for (std::size_t i : {2, 3, 4, 7, 8}) {
        if (f[i].size() != 1) {
          fail(ErrorCode::kParseError,
               where + "rule fields are single characters");
        }
      }
      Rule rule;
      rule.from = f[1];
      rule.read = f[2][0];
      rule.pop[0] = f[3][0];
      rule.pop[1] = f[4][0];
      rule.to = f[6];
      rule.push[0] = f[7][0];
      rule.push[1] = f[8][0];
      if (!valid_pop(rule.pop[0]) || !valid_pop(rule.pop[1]) ||
          !valid_push(rule.push[0]) || !valid_push(rule.push[1])) {
        fail(ErrorCode::kParseError, where + "bad stack operation");
      }
      declare(rule.from);
      declare(rule.to);
      rules.push_back(rule);
    } else {
      fail(ErrorCode::kParseError, where + "unrecognized machine record");
    }
  }
  if (!start) fail(ErrorCode::kParseError, "machine has no start state");
  if (!alphabet) {
    std::string symbols;
    for (const auto& r : rules) {
      if (r.read != '-' && r.read != '$') symbols.push_back(r.read);
    }
    symbols = sorted_symbols(symbols);
    if (symbols.empty()) {
      fail(ErrorCode::kParseError, "machine has no alphabet");
    }
    alphabet.emplace(symbols);
  }
  return TwoStackMachine(*alphabet, std::move(states), *start,
                         std::move(accepting), std::move(rules));
}

TwoStackMachine TwoStackMachine::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open machine file " + path);
  return parse(in);
}

StackProgram TwoStackMachine::program() const {
  std::map<std::string, std::size_t> id;
  for (std::size_t q = 0; q < states_.size(); ++q) id[states_[q]] = q;
  StackProgram p;
  p.alphabet = alphabet_;
  p.states = states_.size();
  p.start = id.at(start_);
  for (const auto& q : accepting_) p.accepting.insert(id.at(q));
  p.stacks = 2;
  for (const auto& rule : rules_) {
    StackProgram::Rule r;
    r.from = id.at(rule.from);
    r.to = id.at(rule.to);
    if (rule.read == '$') {
      r.read = StackProgram::Read::kEnd;
    } else if (rule.read != '-') {
      r.read = StackProgram::Read::kSymbol;
      r.symbol = rule.read;
    }
    for (int s = 0; s < 2; ++s) {
      r.tests.push_back(test_of(rule.pop[s]));
      r.pushes.push_back(push_of(rule.push[s]));
    }
    p.rules.push_back(std::move(r));
  }
  check_deterministic(p);
  return p;
}

TwoStackMachine::Outcome TwoStackMachine::simulate(
    std::string_view word, std::size_t max_steps) const {
  alphabet_.check_word(word);
  std::vector<int> stack[2];
  std::size_t pos = 0;
  Outcome out;
  out.state = start_;
  auto applies = [&](const Rule& rule) {
    if (rule.from != out.state) return false;
    if (rule.read == '$' && pos < word.size()) return false;
    if (rule.read != '-' && rule.read != '$' &&
        (pos >= word.size() || word[pos] != rule.read)) {
      return false;
    }
    for (int s = 0; s < 2; ++s) {
      char c = rule.pop[s];
      if (c == 'e' && !stack[s].empty()) return false;
      if ((c == '0' || c == '1') &&
          (stack[s].empty() || stack[s].back() != c - '0')) {
        return false;
      }
    }
    return true;
  };
  while (true) {
    const Rule* chosen = nullptr;
    for (const auto& rule : rules_) {
      if (!applies(rule)) continue;
      if (chosen) {
        fail(ErrorCode::kConstructionError, "machine is nondeterministic");
      }
      chosen = &rule;
    }
    if (!chosen) {
      out.verdict =
          accepting_.count(out.state) ? Verdict::kAccept : Verdict::kReject;
      return out;
    }
    if (out.steps == max_steps) {
      out.verdict = Verdict::kTimeout;
      return out;
    }
    if (chosen->read != '-' && chosen->read != '$') ++pos;
    for (int s = 0; s < 2; ++s) {
      if (chosen->pop[s] == '0' || chosen->pop[s] == '1') stack[s].pop_back();
      if (chosen->push[s] != '-') stack[s].push_back(chosen->push[s] - '0');
    }
    out.state = chosen->to;
    ++out.steps;
  }
}

Network two_stack_to_net(const TwoStackMachine& machine) {
  return compile_stack_program(machine.program());
}

std::size_t two_stack_budget(std::size_t word_length, std::size_t steps) {
  return stack_program_verdict_tick(word_length, steps);
}

TwoStackMachine anbn_machine(char a, char b) {
  using Rule = TwoStackMachine::Rule;
  std::vector<Rule> rules = {
      {"q0", '-', {'-', '-'}, "A", {'0', '-'}},
      {"A", a, {'-', '-'}, "A", {'1', '-'}},
      {"A", b, {'1', '-'}, "B", {'-', '-'}},
      {"A", '$', {'0', '-'}, "acc", {'-', '-'}},
      {"B", b, {'1', '-'}, "B", {'-', '-'}},
      {"B", '$', {'0', '-'}, "acc", {'-', '-'}},
  };
  return TwoStackMachine(Alphabet(std::string{a, b}), {"q0", "A", "B", "acc"},
                         "q0", {"acc"}, std::move(rules));
}

}  // namespace arnn
