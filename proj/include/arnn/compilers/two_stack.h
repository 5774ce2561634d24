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
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arnn/codec/alphabet.h"
#include "arnn/compilers/stack_program.h"
#include "arnn/core/dynamics.h"
#include "arnn/core/network.h"

namespace arnn {

// Finite control over a read-once input and two binary stacks.
//
// A rule `from read pop1 pop2 -> to push1 push2` applies when:
//   read   symbol: the next input symbol is it (and is consumed)
//          '-': always;  '$': the input is exhausted
//   pop    '0'/'1': the stack top is that bit (and is popped)
//          '-': always;  'e': the stack is empty
// and then pushes '0', '1' or nothing ('-'). The machine halts when no rule
// applies and accepts iff it halts in an accepting state.
class TwoStackMachine {
 public:
  struct Rule {
    std::string from;
    char read = '-';
    char pop[2] = {'-', '-'};
    std::string to;
    char push[2] = {'-', '-'};
  };

  TwoStackMachine(Alphabet alphabet, std::vector<std::string> states,
                  std::string start, std::set<std::string> accepting,
                  std::vector<Rule> rules);

  // Lines `state <name> [accept] [start]`, `alphabet <symbols>` and
  // `rule <state> <read> <pop1> <pop2> -> <state'> <push1> <push2>`.
  static TwoStackMachine parse(std::istream& in);
  static TwoStackMachine load(const std::string& path);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& start() const { return start_; }
  const std::set<std::string>& accepting() const { return accepting_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // The equivalent stack program; ConstructionError if two rules overlap.
  StackProgram program() const;

  struct Outcome {
    // kTimeout when max_steps transitions did not reach a halt.
    Verdict verdict = Verdict::kTimeout;
    std::size_t steps = 0;
    std::string state;
  };
  Outcome simulate(std::string_view word, std::size_t max_steps) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::string start_;
  std::set<std::string> accepting_;
  std::vector<Rule> rules_;
};

// Rational weights (multiples of 1/4) and Signal/saturated neurons; the
// two stacks live in two saturated neurons as Cantor-4 values. A machine
// that halts after T steps on w reports at tick max(|w|, 1) + 6 + 4T.
Network two_stack_to_net(const TwoStackMachine& machine);

// Budget sufficient for a machine run of `steps` transitions.
std::size_t two_stack_budget(std::size_t word_length, std::size_t steps);

// Recognizes { a^n b^n : n >= 0 }, pushing one 1 per a above a 0 marker.
TwoStackMachine anbn_machine(char a = 'a', char b = 'b');

}  // namespace arnn
