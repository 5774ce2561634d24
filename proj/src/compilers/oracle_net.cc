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

#include "arnn/compilers/oracle_net.h"

#include <string>
#include <vector>

#include "arnn/compilers/compose.h"
#include "arnn/compilers/stack_program.h"
#include "arnn/core/dynamics.h"
#include "arnn/error.h"
#include "compilers/net_builder.h"

namespace arnn {

namespace {

using Read = StackProgram::Read;
using Test = StackProgram::Test;
using Push = StackProgram::Push;

constexpr std::size_t kU = 0;  // index counter: v ones above a 0 marker
constexpr std::size_t kW = 1;  // scratch for the multiplication
constexpr std::size_t kK = 2;  // oracle digits

class ProgramWriter {
 public:
  ProgramWriter(const Alphabet& alphabet, std::size_t stacks) {
    p_.alphabet = alphabet;
    p_.stacks = stacks;
  }

  std::size_t state() { return p_.states++; }

  StackProgram::Rule& rule(std::size_t from, std::size_t to) {
    StackProgram::Rule r;
    r.from = from;
    r.to = to;
    r.tests.assign(p_.stacks, Test::kAny);
    r.pushes.assign(p_.stacks, Push::kNone);
    p_.rules.push_back(std::move(r));
    return p_.rules.back();
  }

  StackProgram& program() { return p_; }

 private:
  StackProgram p_;
};

// Rules that leave v = index(w) - 1 ones on U; returns the state entered
// when the input is exhausted.
std::size_t write_indexer(ProgramWriter& w, std::size_t after_input) {
  const Alphabet& alphabet = w.program().alphabet;
  const std::size_t k = alphabet.size();
  const std::size_t init = w.state();
  const std::size_t read = w.state();
  w.program().start = init;
  auto& setup = w.rule(init, read);
  setup.pushes[kU] = Push::kZero;
  setup.pushes[kW] = Push::kZero;

  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t mul = w.state();
    const std::size_t move = w.state();
    auto& take = w.rule(read, mul);
    take.read = Read::kSymbol;
    take.symbol = alphabet.symbol(r);

    // U -> W, k ones per one.
    std::size_t prev = mul;
    for (std::size_t j = 1; j <= k; ++j) {
      std::size_t next = j == k ? mul : w.state();
      auto& step = w.rule(prev, next);
      if (j == 1) step.tests[kU] = Test::kOne;
      step.pushes[kW] = Push::kOne;
      prev = next;
    }
    auto& marker = w.rule(mul, move);
    marker.tests[kU] = Test::kZero;
    marker.pushes[kU] = Push::kZero;

    // W -> U.
    auto& back = w.rule(move, move);
    back.tests[kW] = Test::kOne;
    back.pushes[kU] = Push::kOne;

    // Add rank + 1.
    std::size_t add = w.state();
    auto& moved = w.rule(move, add);
    moved.tests[kW] = Test::kZero;
    moved.pushes[kW] = Push::kZero;
    for (std::size_t j = 1; j <= r + 1; ++j) {
      std::size_t next = j == r + 1 ? read : w.state();
      w.rule(add, next).pushes[kU] = Push::kOne;
      add = next;
    }
  }
  auto& end = w.rule(read, after_input);
  end.read = Read::kEnd;
  return after_input;
}

void check_oracle(const ExactScalar& oracle) {
  bool cantor = false;
  if (oracle.kind() == ExactScalar::Kind::kOracle) {
    cantor = oracle.as_oracle().packing == Packing::kCantor4;
  } else if (oracle.kind() == ExactScalar::Kind::kStream) {
    cantor = oracle.as_stream().base() == 4;
  }
  if (!cantor) {
    fail(ErrorCode::kConstructionError,
         "oracle weight must be a Cantor-4 oracle or base-4 stream");
  }
}

Network monolithic_oracle_net(const OracleNetSpec& spec) {
  ProgramWriter w(spec.alphabet, 3);
  StackProgram& p = w.program();
  p.preload = {std::nullopt, std::nullopt, spec.oracle};

  const std::size_t consult = w.state();
  write_indexer(w, consult);
  const std::size_t accept = w.state();
  const std::size_t reject = w.state();
  const std::size_t flag = w.state();
  p.accepting.insert(accept);
  p.flagging.insert(flag);
  for (Test digit : {Test::kZero, Test::kOne}) {
    auto& skip = w.rule(consult, consult);
    skip.tests[kU] = Test::kOne;
    skip.tests[kK] = digit;
  }
  auto& no = w.rule(consult, reject);
  no.tests[kU] = Test::kZero;
  no.tests[kK] = Test::kZero;
  auto& yes = w.rule(consult, accept);
  yes.tests[kU] = Test::kZero;
  yes.tests[kK] = Test::kOne;
  auto& exhausted = w.rule(consult, flag);
  exhausted.tests[kK] = Test::kEmpty;
  return compile_stack_program(p);
}

// Steps the monolithic program takes on a word of these ranks.
std::size_t monolithic_steps(std::string_view word, const Alphabet& alphabet) {
  const std::size_t k = alphabet.size();
  std::size_t v = 0;
  std::size_t steps = 1;
  for (char c : word) {
    std::size_t r = alphabet.rank(c);
    steps += 2 * k * v + r + 4;
    v = k * v + r + 1;
  }
  return steps + 1 + v + 1;
}

}  // namespace

Network indexer_net(const Alphabet& alphabet) {
  ProgramWriter w(alphabet, 2);
  StackProgram& p = w.program();
  p.output = StackProgram::Output::kStream;
  const std::size_t first = w.state();
  write_indexer(w, first);
  const std::size_t rest = w.state();
  const std::size_t halt = w.state();
  w.rule(first, rest).emit = true;
  auto& more = w.rule(rest, rest);
  more.tests[kU] = Test::kOne;
  more.emit = true;
  w.rule(rest, halt).tests[kU] = Test::kZero;
  return compile_stack_program(p);
}

// Neuron roles: pulse1/B1/Y see a pulse one tick after it arrives and pop
// the stack on the next; `last` keeps the most recent bit, `flag` latches a
// pop from the empty stack, `seen`/`end` detect the fall of the input
// validation line.
Network oracle_extractor_net(const ExactScalar& oracle) {
  check_oracle(oracle);
  const auto sat = Activation::kSaturatedLinear;
  const auto sig = Activation::kSignal;
  NetBuilder b(1);
  const std::size_t on = b.add(sig);
  b.bias(on, 1);
  const std::size_t init = b.add(sig);
  b.weight(init, on, -1);
  b.bias(init, 1);
  const std::size_t stack = b.add(sat);
  const std::size_t pulse = b.add(sig);
  const std::size_t gated = b.add(sat);
  const std::size_t bit = b.add(sig);
  const std::size_t nonempty = b.add(sig);
  const std::size_t last = b.add(sig);
  const std::size_t flag = b.add(sig);
  const std::size_t seen = b.add(sig);
  const std::size_t end = b.add(sig);
  const std::size_t out_valid = b.add(sig);
  const std::size_t out_data = b.add(sig);
  const std::size_t out_flag = b.add(sig);

  b.weight(stack, stack, 1);
  b.lazy_weight(stack, init, oracle);
  b.weight(stack, gated, 3);
  b.weight(stack, pulse, -1);
  b.weight(stack, bit, -2);

  b.input(pulse, 0, 1);
  b.validation(pulse, 1);
  b.bias(pulse, -1);

  b.weight(gated, stack, 1);
  b.input(gated, 0, 1);
  b.validation(gated, 1);
  b.bias(gated, -2);

  b.weight(bit, stack, 4);
  b.input(bit, 0, 4);
  b.validation(bit, 4);
  b.bias(bit, -10);

  b.weight(nonempty, stack, 4);

  b.weight(last, last, 1);
  b.weight(last, pulse, -1);
  b.weight(last, bit, 2);

  b.weight(flag, flag, 1);
  b.weight(flag, pulse, 1);
  b.weight(flag, nonempty, -1);

  b.weight(seen, seen, 1);
  b.validation(seen, 1);
  b.weight(end, seen, 1);
  b.validation(end, -1);

  b.weight(out_valid, end, 1);
  b.weight(out_data, last, 1);
  b.weight(out_data, flag, -1);
  b.weight(out_flag, flag, 1);

  Network net = b.build();
  net.set_outputs(out_data, out_valid, out_flag);
  return net;
}

Network oracle_net(const OracleNetSpec& spec) {
  check_oracle(spec.oracle);
  if (spec.realization == OracleNetSpec::Realization::kComposed) {
    return compose_nets(indexer_net(spec.alphabet),
                        oracle_extractor_net(spec.oracle),
                        single_line_handoff());
  }
  return monolithic_oracle_net(spec);
}

std::size_t oracle_net_budget(std::string_view word,
                              const Alphabet& alphabet) {
  alphabet.check_word(word);
  return stack_program_verdict_tick(word.size(),
                                    monolithic_steps(word, alphabet)) +
         16;
}

int consult_oracle(const Network& net, std::string_view word,
                   std::size_t budget, const PrecisionBudget& precision) {
  RunResult result = run(net, word, budget, precision);
  if (result.verdict == Verdict::kTimeout) {
    fail(ErrorCode::kTimeout, "oracle net gave no verdict within " +
                                  std::to_string(budget) + " ticks");
  }
  if (result.flagged) {
    fail(ErrorCode::kHorizonExceeded,
         "index of \"" + std::string(word) + "\" is beyond the oracle horizon");
  }
  return result.verdict == Verdict::kAccept ? 1 : 0;
}

}  // namespace arnn
