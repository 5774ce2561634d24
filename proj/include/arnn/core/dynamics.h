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
#include <utility>
#include <vector>

#include "arnn/core/network.h"
#include "arnn/numerics/activation.h"
#include "arnn/numerics/exact_value.h"

namespace arnn {

// x(t): one value per neuron, each in [0,1].
struct NetworkState {
  std::vector<ExactValue> values;

  static NetworkState zero(std::size_t neurons) {
    return NetworkState{std::vector<ExactValue>(neurons)};
  }
  friend bool operator==(const NetworkState&, const NetworkState&) = default;
};

// u(t): one bit per data line plus the validation bit.
struct InputFrame {
  std::vector<int> data;
  int validation = 0;
};

// A network prepared for repeated stepping. Exact weights are gathered into
// sparse rows once; lazy weights are expanded per step within the budget.
class Simulator {
 public:
  explicit Simulator(const Network& net,
                     PrecisionBudget budget = PrecisionBudget());

  const Network& network() const { return net_; }

  // Synchronous update: every neuron reads the same x(t).
  NetworkState step(const NetworkState& state, const InputFrame& input) const;

  // x_i(t+1) alone. UnknownSign errors carry the neuron index.
  ExactValue evaluate(std::size_t i, const NetworkState& state,
                      const InputFrame& input) const;

 private:
  struct Term {
    std::size_t index;
    Rational weight;
  };
  struct LazyTerm {
    std::size_t index;
    ExactScalar weight;
  };
  struct Row {
    std::vector<Term> state_terms;
    std::vector<Term> input_terms;
    Rational bias;
    std::vector<LazyTerm> lazy_state_terms;
    std::vector<LazyTerm> lazy_input_terms;
    std::optional<ExactScalar> lazy_bias;
  };

  void check_frame(const InputFrame& input) const;

  const Network& net_;
  PrecisionBudget budget_;
  std::vector<Row> rows_;
};

NetworkState step(const Network& net, const NetworkState& state,
                  const InputFrame& input,
                  const PrecisionBudget& budget = PrecisionBudget());

// Output lines are read through the signal function.
int output_bit(const ExactValue& value, std::size_t neuron);

enum class Verdict { kAccept, kReject, kTimeout };

std::string_view to_string(Verdict v);

struct TraceTick {
  std::vector<int> data;
  int validation = 0;
  int out_data = 0;
  int out_valid = 0;
  int out_flag = 0;

  friend bool operator==(const TraceTick&, const TraceTick&) = default;
};

struct IOTrace {
  std::vector<TraceTick> ticks;

  friend bool operator==(const IOTrace&, const IOTrace&) = default;
};

std::string format_trace(const IOTrace& trace);

struct RunResult {
  Verdict verdict = Verdict::kTimeout;
  // The flag line was raised alongside the verdict.
  bool flagged = false;
  IOTrace trace;
};

// Presents the word one symbol per tick on the data lines (one-hot, with
// validation 1), then validation 0, starting from the zero state. The
// verdict is the output data bit on the first tick whose output validation
// bit is 1; the budget counts all ticks. ConfigError if budget < |word| + 1.
RunResult run(const Network& net, std::string_view word, std::size_t budget,
              const PrecisionBudget& precision = PrecisionBudget());
RunResult run(const Simulator& sim, std::string_view word, std::size_t budget);

struct RecognitionEntry {
  std::string word;
  int expected = 0;
  Verdict verdict = Verdict::kTimeout;
};

struct RecognitionReport {
  std::size_t total = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t timeouts = 0;
  std::vector<RecognitionEntry> entries;
};

// Runs every sample word. A budget too small for a word counts as a
// timeout for that word.
RecognitionReport recognizes(
    const Network& net,
    const std::vector<std::pair<std::string, int>>& sample, std::size_t budget,
    const PrecisionBudget& precision = PrecisionBudget());

}  // namespace arnn
