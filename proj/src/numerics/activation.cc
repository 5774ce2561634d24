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

#include "arnn/numerics/activation.h"

#include <bit>

#include "arnn/error.h"

namespace arnn {
namespace {

std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : std::bit_width(n - 1);
}

}  // namespace

PrecisionBudget::PrecisionBudget(std::size_t max_digits,
                                 OnExhaustion on_exhaustion)
    : max_digits(max_digits), on_exhaustion(on_exhaustion) {
  if (max_digits < 1) {
    fail(ErrorCode::kConfigError, "precision budget needs max_digits >= 1");
  }
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::kLess: return "less";
    case Comparison::kEqual: return "equal";
    case Comparison::kGreater: return "greater";
    case Comparison::kUnknown: return "unknown";
  }
  return "unknown";
}

Rational saturated_sigma(const Rational& x) {
  if (sgn(x) < 0) return Rational(0);
  if (x > 1) return Rational(1);
  return x;
}

ExactValue saturated_sigma(const ExactValue& x, const PrecisionBudget& budget) {
  if (x.is_point()) return ExactValue(saturated_sigma(x.lo()));
  bool straddles = (sgn(x.lo()) < 0 && sgn(x.hi()) > 0) ||
                   (x.lo() < 1 && x.hi() > 1);
  if (straddles &&
      budget.on_exhaustion == PrecisionBudget::OnExhaustion::kFail) {
    fail(ErrorCode::kUnknownSign,
         "enclosure " + to_string(x) + " straddles a saturation breakpoint");
  }
  return ExactValue::between(saturated_sigma(x.lo()),
                             saturated_sigma(x.hi()));
}

ExactValue saturated_sigma(const ExactScalar& x,
                           const PrecisionBudget& budget) {
  return saturated_sigma(x.enclose(budget.max_digits), budget);
}

int signal(const Rational& x) { return sgn(x) > 0 ? 1 : 0; }

int signal(const ExactValue& x) {
  if (sgn(x.lo()) > 0) return 1;
  if (sgn(x.hi()) <= 0) return 0;
  fail(ErrorCode::kUnknownSign,
       "sign of " + to_string(x) + " is not decided at this precision");
}

int signal(const ExactScalar& x, const PrecisionBudget& budget) {
  return signal(x.enclose(budget.max_digits));
}

ExactValue affine_combine(std::span<const ExactScalar> weights,
                          std::span<const ExactValue> states,
                          std::span<const ExactScalar> input_weights,
                          std::span<const int> inputs, const ExactScalar& bias,
                          const PrecisionBudget& budget) {
  if (weights.size() != states.size()) {
    fail(ErrorCode::kShapeError,
         std::to_string(weights.size()) + " weights for " +
             std::to_string(states.size()) + " states");
  }
  if (input_weights.size() != inputs.size()) {
    fail(ErrorCode::kShapeError,
         std::to_string(input_weights.size()) + " input weights for " +
             std::to_string(inputs.size()) + " inputs");
  }

  std::size_t lazy_terms = bias.exact_value() ? 0 : 1;
  for (const auto& w : weights) lazy_terms += w.exact_value() ? 0 : 1;
  for (const auto& w : input_weights) lazy_terms += w.exact_value() ? 0 : 1;
  const std::size_t term_bits = budget.max_digits + ceil_log2(lazy_terms);

  ExactValue sum = bias.enclose(term_bits);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j].is_zero()) continue;
    const ExactValue& x = states[j];
    std::size_t scale = std::max(log2_ceil_magnitude(x.lo()),
                                 log2_ceil_magnitude(x.hi()));
    sum += weights[j].enclose(term_bits + scale) * x;
  }
  for (std::size_t j = 0; j < input_weights.size(); ++j) {
    if (inputs[j] != 0 && inputs[j] != 1) {
      fail(ErrorCode::kShapeError,
           "input line " + std::to_string(j) + " carries a non-bit value");
    }
    if (inputs[j] == 1) sum += input_weights[j].enclose(term_bits);
  }
  return sum;
}

Comparison compare_with_precision(const ExactScalar& x, const ExactScalar& y,
                                  const PrecisionBudget& budget) {
  if (!x.is_lazy() && !y.is_lazy()) {
    int c = cmp(*x.exact_value(), *y.exact_value());
    return c < 0 ? Comparison::kLess
                 : c > 0 ? Comparison::kGreater : Comparison::kEqual;
  }
  if (x.is_lazy() && y.is_lazy() && x.digits().same_stream(y.digits())) {
    return Comparison::kEqual;
  }
  ExactValue a = x.enclose(budget.max_digits);
  ExactValue b = y.enclose(budget.max_digits);
  if (a.hi() < b.lo()) return Comparison::kLess;
  if (a.lo() > b.hi()) return Comparison::kGreater;
  return Comparison::kUnknown;
}

}  // namespace arnn
