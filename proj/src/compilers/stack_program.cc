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

#include "arnn/compilers/stack_program.h"

#include <algorithm>
#include <string>

#include "arnn/error.h"
#include "compilers/net_builder.h"

namespace arnn {

namespace {

using Test = StackProgram::Test;
using Push = StackProgram::Push;
using Read = StackProgram::Read;

bool tests_compatible(Test x, Test y) {
  return x == Test::kAny || y == Test::kAny || x == y;
}

bool reads_compatible(const StackProgram::Rule& x,
                      const StackProgram::Rule& y) {
  if (x.read == Read::kAny || y.read == Read::kAny) {
    return true;
  }
  if (x.read != y.read) {
    return false;
  }
  return x.read == Read::kEnd || x.symbol == y.symbol;
}

std::string describe(std::size_t index, const StackProgram::Rule& rule) {
  return "rule " + std::to_string(index + 1) + " (state " +
         std::to_string(rule.from) + ")";
}

void check_rule(const StackProgram& program, std::size_t index) {
  const StackProgram::Rule& rule = program.rules[index];
  if (rule.from >= program.states || rule.to >= program.states) {
    fail(ErrorCode::kConstructionError,
         describe(index, rule) + " names an unknown state");
  }
  if (rule.tests.size() != program.stacks ||
      rule.pushes.size() != program.stacks) {
    fail(ErrorCode::kConstructionError,
         describe(index, rule) + " does not cover every stack");
  }
  if (rule.read == Read::kSymbol && !program.alphabet.contains(rule.symbol)) {
    fail(ErrorCode::kConstructionError,
         describe(index, rule) + " reads a symbol outside the alphabet");
  }
}

}  // namespace

void check_deterministic(const StackProgram& program) {
  if (program.states == 0 || program.start >= program.states) {
    fail(ErrorCode::kConstructionError, "start state out of range");
  }
  for (std::size_t q : program.accepting) {
    if (q >= program.states) {
      fail(ErrorCode::kConstructionError, "accepting state out of range");
    }
  }
  for (std::size_t q : program.flagging) {
    if (q >= program.states || program.accepting.count(q)) {
      fail(ErrorCode::kConstructionError,
           "flagging state out of range or accepting");
    }
  }
  if (!program.preload.empty() && program.preload.size() != program.stacks) {
    fail(ErrorCode::kConstructionError, "preload does not cover every stack");
  }
  for (std::size_t r = 0; r < program.rules.size(); ++r) {
    check_rule(program, r);
  }
  for (std::size_t r = 0; r < program.rules.size(); ++r) {
    for (std::size_t s = r + 1; s < program.rules.size(); ++s) {
      const StackProgram::Rule& x = program.rules[r];
      const StackProgram::Rule& y = program.rules[s];
      if (x.from != y.from || !reads_compatible(x, y)) {
        continue;
      }
      bool overlap = true;
      for (std::size_t k = 0; k < program.stacks && overlap; ++k) {
        overlap = tests_compatible(x.tests[k], y.tests[k]);
      }
      if (overlap) {
        fail(ErrorCode::kConstructionError,
             describe(r, x) + " and " + describe(s, y) +
                 " can apply to the same configuration");
      }
    }
  }
}

std::size_t stack_program_verdict_tick(std::size_t word_length,
                                       std::size_t steps) {
  return std::max<std::size_t>(word_length, 1) + 6 + 4 * steps;
}

// Layout. The input word is buffered in X as base-B digits (B = 2k, symbol
// of rank r stored as 2r+1) while it arrives. One tick after the input ends
// a `go` pulse starts the control. Each machine step then takes four ticks:
//
//   tau    control pulse Q_q
//   tau+1  copy C_q; readers see the buffer and stack tops
//   tau+2  rule neurons R fire (control and all conditions)
//   tau+3  gated copies Y = stack if the rule fired; delayed D = R
//   tau+4  stacks updated, next control pulse
//
// A control pulse with no applicable rule becomes a halt pulse at tau+3.
Network compile_stack_program(const StackProgram& program) {
  check_deterministic(program);
  const Alphabet& alphabet = program.alphabet;
  const std::size_t k = alphabet.size();
  const Rational base(static_cast<long>(2 * k));
  const std::size_t stacks = program.stacks;
  const std::size_t n_rules = program.rules.size();
  const auto sat = Activation::kSaturatedLinear;
  const auto sig = Activation::kSignal;

  NetBuilder b(k);
  const std::size_t on = b.add(sig);
  b.bias(on, 1);

  // Input buffer.
  const std::size_t power = b.add(sat);
  b.weight(power, power, 1 / base);
  b.weight(power, on, -1 / base);
  b.bias(power, 1 / base);
  b.validation(power, 1);
  b.bias(power, -1);
  std::vector<std::size_t> gate(k);
  for (std::size_t r = 0; r < k; ++r) {
    gate[r] = b.add(sat);
    b.weight(gate[r], power, 1 / base);
    b.weight(gate[r], on, -1 / base);
    b.bias(gate[r], 1 / base - 1);
    b.input(gate[r], r, 1);
  }
  const std::size_t buffer = b.add(sat);
  b.weight(buffer, buffer, 1);
  for (std::size_t r = 0; r < k; ++r) {
    b.weight(buffer, gate[r], Rational(static_cast<long>(2 * r + 1)));
  }
  // ge[j] = 1 iff the front symbol has rank >= j (ge[0]: buffer nonempty).
  std::vector<std::size_t> ge(k);
  for (std::size_t j = 0; j < k; ++j) {
    ge[j] = b.add(sig);
    b.weight(ge[j], buffer, base);
    b.bias(ge[j], Rational(-2 * static_cast<long>(j)));
  }

  // Start pulse.
  const std::size_t done = b.add(sig);
  b.weight(done, on, 1);
  b.validation(done, -1);
  const std::size_t go = b.add(sig);
  b.weight(go, on, 1);
  b.validation(go, -1);
  b.weight(go, done, -1);

  // Stacks, with readers for the top bit and nonemptiness.
  std::vector<std::size_t> stack(stacks), top1(stacks), nonempty(stacks);
  for (std::size_t s = 0; s < stacks; ++s) {
    stack[s] = b.add(sat);
    b.weight(stack[s], stack[s], 1);
    top1[s] = b.add(sig);
    b.weight(top1[s], stack[s], 4);
    b.bias(top1[s], -2);
    nonempty[s] = b.add(sig);
    b.weight(nonempty[s], stack[s], 4);
  }
  bool any_preload = false;
  for (const auto& value : program.preload) {
    any_preload = any_preload || value.has_value();
  }
  if (any_preload) {
    const std::size_t init = b.add(sig);
    b.weight(init, on, -1);
    b.bias(init, 1);
    for (std::size_t s = 0; s < stacks; ++s) {
      const auto& value = program.preload[s];
      if (!value) {
        continue;
      }
      if (value->is_lazy()) {
        b.lazy_weight(stack[s], init, *value);
      } else {
        b.weight(stack[s], init, value->exact_value().value());
      }
    }
  }

  // Control.
  std::vector<std::size_t> control(program.states), copy(program.states),
      copy2(program.states);
  for (std::size_t q = 0; q < program.states; ++q) {
    control[q] = b.add(sig);
    copy[q] = b.add(sig);
    b.weight(copy[q], control[q], 1);
    copy2[q] = b.add(sig);
    b.weight(copy2[q], copy[q], 1);
  }
  b.weight(control[program.start], go, 1);

  std::vector<std::size_t> fired(n_rules), delayed(n_rules);
  for (std::size_t r = 0; r < n_rules; ++r) {
    const StackProgram::Rule& rule = program.rules[r];
    fired[r] = b.add(sig);
    delayed[r] = b.add(sig);
    b.weight(delayed[r], fired[r], 1);
    std::size_t f = fired[r];
    b.weight(f, copy[rule.from], 1);
    long conditions = 0;
    switch (rule.read) {
      case Read::kAny:
        break;
      case Read::kEnd:
        ++conditions;
        b.bias(f, 1);
        b.weight(f, ge[0], -1);
        break;
      case Read::kSymbol: {
        ++conditions;
        std::size_t rank = alphabet.rank(rule.symbol);
        b.weight(f, ge[rank], 1);
        if (rank + 1 < k) {
          b.weight(f, ge[rank + 1], -1);
        }
        break;
      }
    }
    for (std::size_t s = 0; s < stacks; ++s) {
      switch (rule.tests[s]) {
        case Test::kAny:
          break;
        case Test::kOne:
          ++conditions;
          b.weight(f, top1[s], 1);
          break;
        case Test::kZero:
          ++conditions;
          b.weight(f, nonempty[s], 1);
          b.weight(f, top1[s], -1);
          break;
        case Test::kEmpty:
          ++conditions;
          b.bias(f, 1);
          b.weight(f, nonempty[s], -1);
          break;
      }
    }
    b.bias(f, Rational(-conditions));

    // Stack updates: new = old + alpha * old + beta, the old value taken
    // through a gate that is open only when this rule fired.
    auto update = [&](std::size_t target, const Rational& alpha,
                      const Rational& beta) {
      if (alpha != 0) {
        std::size_t gated = b.add(sat);
        b.weight(gated, target, 1);
        b.weight(gated, f, 1);
        b.bias(gated, -1);
        b.weight(target, gated, alpha);
      }
      if (beta != 0) {
        b.weight(target, delayed[r], beta);
      }
    };
    if (rule.read == Read::kSymbol) {
      long digit = 2 * static_cast<long>(alphabet.rank(rule.symbol)) + 1;
      update(buffer, base - 1, Rational(-digit));
    }
    for (std::size_t s = 0; s < stacks; ++s) {
      bool pops = rule.tests[s] == Test::kZero || rule.tests[s] == Test::kOne;
      long popped = rule.tests[s] == Test::kOne ? 1 : 0;
      bool pushes = rule.pushes[s] != Push::kNone;
      long pushed = rule.pushes[s] == Push::kOne ? 1 : 0;
      if (pops && pushes) {
        update(stack[s], 0, Rational(pushed - popped, 2));
      } else if (pops) {
        update(stack[s], 3, Rational(-(2 * popped + 1)));
      } else if (pushes) {
        update(stack[s], Rational(-3, 4), Rational(2 * pushed + 1, 4));
      }
    }
    b.weight(control[rule.to], delayed[r], 1);
  }

  // Halting: a copy2 pulse with no rule firing in the same tick.
  auto halt_detector = [&](auto&& member) {
    std::size_t h = b.add(sig);
    for (std::size_t q = 0; q < program.states; ++q) {
      if (member(q)) {
        b.weight(h, copy2[q], 1);
      }
    }
    for (std::size_t r = 0; r < n_rules; ++r) {
      b.weight(h, fired[r], -1);
    }
    return h;
  };
  auto accepting = [&](std::size_t q) { return program.accepting.count(q); };
  auto flagging = [&](std::size_t q) { return program.flagging.count(q); };
  auto rejecting = [&](std::size_t q) {
    return !accepting(q) && !flagging(q);
  };
  const std::size_t acc = halt_detector(accepting);
  const std::size_t rej = halt_detector(rejecting);
  const std::size_t flg = halt_detector(flagging);

  const std::size_t out_data = b.add(sig);
  const std::size_t out_valid = b.add(sig);
  const std::size_t out_flag = b.add(sig);
  b.weight(out_flag, flg, 1);
  if (program.output == StackProgram::Output::kVerdict) {
    b.weight(out_data, acc, 1);
    b.weight(out_valid, acc, 1);
    b.weight(out_valid, rej, 1);
    b.weight(out_valid, flg, 1);
  } else {
    // The validation line rises with the first emission and falls when the
    // machine halts.
    for (std::size_t r = 0; r < n_rules; ++r) {
      if (program.rules[r].emit) {
        b.weight(out_data, fired[r], 1);
        b.weight(out_valid, fired[r], 1);
      }
    }
    b.weight(out_valid, out_valid, 1);
    b.weight(out_valid, acc, -2);
    b.weight(out_valid, rej, -2);
    b.weight(out_valid, flg, -2);
  }

  Network net = b.build();
  net.set_alphabet(alphabet);
  net.set_outputs(out_data, out_valid, out_flag);
  return net;
}

}  // namespace arnn
