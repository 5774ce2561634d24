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

#include "arnn/core/dynamics.h"

#include <bit>
#include <optional>
#include <sstream>
#include <utility>

#include "arnn/error.h"

namespace arnn {
namespace {

std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : std::bit_width(n - 1);
}

std::size_t magnitude_bits(const ExactValue& x) {
  return std::max(log2_ceil_magnitude(x.lo()), log2_ceil_magnitude(x.hi()));
}

}  // namespace

Simulator::Simulator(const Network& net, PrecisionBudget budget)
    : net_(net), budget_(budget), rows_(net.neurons()) {
  const std::size_t n = net.neurons();
  const std::size_t columns = net.inputs() + 1;
  for (std::size_t i = 0; i < n; ++i) {
    Row& row = rows_[i];
    for (std::size_t j = 0; j < n; ++j) {
      const ExactScalar& w = net.state_weight(i, j);
      if (w.is_zero()) continue;
      if (auto exact = w.exact_value()) {
        row.state_terms.push_back({j, *exact});
      } else {
        row.lazy_state_terms.push_back({j, w});
      }
    }
    for (std::size_t j = 0; j < columns; ++j) {
      const ExactScalar& w = net.input_weight(i, j);
      if (w.is_zero()) continue;
      if (auto exact = w.exact_value()) {
        row.input_terms.push_back({j, *exact});
      } else {
        row.lazy_input_terms.push_back({j, w});
      }
    }
    if (auto exact = net.bias(i).exact_value()) {
      row.bias = *exact;
    } else {
      row.lazy_bias = net.bias(i);
    }
  }
}

void Simulator::check_frame(const InputFrame& input) const {
  if (input.data.size() != net_.inputs()) {
    fail(ErrorCode::kShapeError,
         std::to_string(input.data.size()) + " data bits for " +
             std::to_string(net_.inputs()) + " data lines");
  }
  for (int b : input.data) {
    if (b != 0 && b != 1) fail(ErrorCode::kShapeError, "input bits are 0/1");
  }
  if (input.validation != 0 && input.validation != 1) {
    fail(ErrorCode::kShapeError, "validation bit is 0/1");
  }
}

ExactValue Simulator::evaluate(std::size_t i, const NetworkState& state,
                               const InputFrame& input) const {
  const Row& row = rows_.at(i);
  auto line = [&](std::size_t column) {
    return column == net_.inputs() ? input.validation : input.data[column];
  };

  // Exact part: a single rational unless some state is an enclosure.
  Rational acc = row.bias;
  // Enclosure spread, allocated only when some state is an interval.
  std::optional<std::pair<Rational, Rational>> extra;
  for (const Term& t : row.state_terms) {
    const ExactValue& x = state.values[t.index];
    if (x.is_point()) {
      const Rational& v = x.lo();
      if (sgn(v) == 0) continue;
      if (v == 1) {
        acc += t.weight;
      } else {
        acc += t.weight * v;
      }
    } else {
      ExactValue product = ExactValue(t.weight) * x;
      if (!extra) extra.emplace();
      extra->first += product.lo();
      extra->second += product.hi();
    }
  }
  for (const Term& t : row.input_terms) {
    if (line(t.index) == 1) acc += t.weight;
  }

  const std::size_t lazy_count = row.lazy_state_terms.size() +
                                 row.lazy_input_terms.size() +
                                 (row.lazy_bias ? 1 : 0);
  if (!extra && lazy_count == 0) {
    if (net_.activation(i) == Activation::kSignal) {
      return ExactValue(Rational(signal(acc)));
    }
    return ExactValue(saturated_sigma(acc));
  }
  ExactValue sum = extra ? ExactValue::between(acc + extra->first,
                                               acc + extra->second)
                         : ExactValue(acc);
  if (lazy_count > 0) {
    const std::size_t bits = budget_.max_digits + ceil_log2(lazy_count);
    if (row.lazy_bias) sum += row.lazy_bias->enclose(bits);
    for (const LazyTerm& t : row.lazy_state_terms) {
      const ExactValue& x = state.values[t.index];
      if (x.is_point() && sgn(x.lo()) == 0) continue;
      sum += t.weight.enclose(bits + magnitude_bits(x)) * x;
    }
    for (const LazyTerm& t : row.lazy_input_terms) {
      if (line(t.index) == 1) sum += t.weight.enclose(bits);
    }
  }

  try {
    if (net_.activation(i) == Activation::kSignal) {
      return ExactValue(Rational(signal(sum)));
    }
    return saturated_sigma(sum, budget_);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kUnknownSign) {
      throw Error(ErrorCode::kUnknownSign,
                  "neuron " + std::to_string(i) + ": " +
                      to_string(sum) + " is undecided within " +
                      std::to_string(budget_.max_digits) + " digits",
                  i);
    }
    throw;
  }
}

NetworkState Simulator::step(const NetworkState& state,
                             const InputFrame& input) const {
  if (state.values.size() != net_.neurons()) {
    fail(ErrorCode::kShapeError,
         "state has " + std::to_string(state.values.size()) +
             " components for " + std::to_string(net_.neurons()) +
             " neurons");
  }
  check_frame(input);
  NetworkState next;
  next.values.reserve(net_.neurons());
  for (std::size_t i = 0; i < net_.neurons(); ++i) {
    next.values.push_back(evaluate(i, state, input));
  }
  return next;
}

NetworkState step(const Network& net, const NetworkState& state,
                  const InputFrame& input, const PrecisionBudget& budget) {
  return Simulator(net, budget).step(state, input);
}

int output_bit(const ExactValue& value, std::size_t neuron) {
  try {
    return signal(value);
  } catch (const Error& e) {
    throw Error(e.code(), "output neuron " + std::to_string(neuron) + ": " +
                              e.what(),
                neuron);
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kAccept: return "accept";
    case Verdict::kReject: return "reject";
    case Verdict::kTimeout: return "timeout";
  }
  return "timeout";
}

std::string format_trace(const IOTrace& trace) {
  std::ostringstream out;
  for (std::size_t t = 0; t < trace.ticks.size(); ++t) {
    const TraceTick& tick = trace.ticks[t];
    out << "tick " << t << " in ";
    for (int b : tick.data) out << b;
    out << " valid " << tick.validation << " out " << tick.out_data
        << " valid " << tick.out_valid;
    if (tick.out_flag) out << " flag";
    out << "\n";
  }
  return out.str();
}

RunResult run(const Network& net, std::string_view word, std::size_t budget,
              const PrecisionBudget& precision) {
  Simulator sim(net, precision);
  return run(sim, word, budget);
}

RunResult run(const Simulator& sim, std::string_view word,
              std::size_t budget) {
  const Network& net = sim.network();
  if (budget < word.size() + 1) {
    fail(ErrorCode::kConfigError,
         "budget " + std::to_string(budget) + " is below |word| + 1 = " +
             std::to_string(word.size() + 1));
  }
  if (!net.alphabet()) {
    fail(ErrorCode::kConfigError, "network has no input alphabet");
  }
  const Alphabet& alphabet = *net.alphabet();
  alphabet.check_word(word);

  NetworkState state = NetworkState::zero(net.neurons());
  RunResult result;
  for (std::size_t t = 0; t < budget; ++t) {
    InputFrame frame{std::vector<int>(net.inputs(), 0), 0};
    if (t < word.size()) {
      frame.data[alphabet.rank(word[t])] = 1;
      frame.validation = 1;
    }
    state = sim.step(state, frame);

    TraceTick tick;
    tick.data = frame.data;
    tick.validation = frame.validation;
    tick.out_data = output_bit(state.values[net.out_data()], net.out_data());
    tick.out_valid =
        output_bit(state.values[net.out_valid()], net.out_valid());
    if (net.out_flag()) {
      tick.out_flag =
          output_bit(state.values[*net.out_flag()], *net.out_flag());
    }
    result.trace.ticks.push_back(tick);
    if (tick.out_valid == 1) {
      result.verdict = tick.out_data ? Verdict::kAccept : Verdict::kReject;
      result.flagged = tick.out_flag == 1;
      return result;
    }
  }
  result.verdict = Verdict::kTimeout;
  return result;
}

RecognitionReport recognizes(
    const Network& net,
    const std::vector<std::pair<std::string, int>>& sample, std::size_t budget,
    const PrecisionBudget& precision) {
  RecognitionReport report;
  Simulator sim(net, precision);
  for (const auto& [word, expected] : sample) {
    RecognitionEntry entry{word, expected, Verdict::kTimeout};
    if (budget >= word.size() + 1) {
      entry.verdict = run(sim, word, budget).verdict;
    }
    ++report.total;
    if (entry.verdict == Verdict::kTimeout) {
      ++report.timeouts;
    } else if ((entry.verdict == Verdict::kAccept) == (expected == 1)) {
      ++report.agree;
    } else {
      ++report.disagree;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace arnn
