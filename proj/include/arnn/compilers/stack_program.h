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
#include <set>
#include <string>
#include <vector>

#include "arnn/codec/alphabet.h"
#include "arnn/core/network.h"
#include "arnn/numerics/exact_scalar.h"

namespace arnn {

// Finite control over Cantor-4 stacks plus a read-once input buffer: the
// common target of the two-stack and oracle compilers.
//
// A rule fires when the control is in `from`, the read test holds for the
// front of the input buffer and every stack test holds for its stack.
// Symbol reads consume the symbol; zero/one tests pop the tested bit.
// The machine halts when no rule applies.
struct StackProgram {
  enum class Read { kAny, kSymbol, kEnd };
  enum class Test { kAny, kZero, kOne, kEmpty };
  enum class Push { kNone, kZero, kOne };
  enum class Output {
    kVerdict,  // out_valid rises once at halt; out_data = accepting
    kStream,   // out_data pulses on emitting rules; out_valid spans them
  };

  struct Rule {
    std::size_t from = 0;
    std::size_t to = 0;
    Read read = Read::kAny;
    char symbol = 0;
    std::vector<Test> tests;
    std::vector<Push> pushes;
    bool emit = false;
  };

  Alphabet alphabet{"a"};
  std::size_t states = 0;
  std::size_t start = 0;
  std::set<std::size_t> accepting;
  // Halting in one of these raises the flag line (and rejects).
  std::set<std::size_t> flagging;
  std::size_t stacks = 0;
  // Optional initial contents per stack, loaded by a one-shot pulse; must be
  // a Cantor-4 value.
  std::vector<std::optional<ExactScalar>> preload;
  std::vector<Rule> rules;
  Output output = Output::kVerdict;
};

// ConstructionError when two rules of one state can fire together, or on
// malformed rules.
void check_deterministic(const StackProgram& program);

// Builds the network. Each machine step takes four ticks; the control waits
// until the whole input is buffered. Integer weights everywhere except the
// stack update gadgets (multiples of 1/4) and the preloaded values.
Network compile_stack_program(const StackProgram& program);

// Tick at which a verdict-mode network reports, for a machine that halts
// after `steps` transitions on a word of length n.
std::size_t stack_program_verdict_tick(std::size_t word_length,
                                       std::size_t steps);

}  // namespace arnn
