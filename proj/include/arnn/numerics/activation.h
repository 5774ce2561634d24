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
#include <span>
#include <string_view>

#include "arnn/numerics/exact_scalar.h"
#include "arnn/numerics/exact_value.h"
#include "arnn/numerics/rational.h"

namespace arnn {

// How far lazily-known reals may be expanded before giving up.
struct PrecisionBudget {
  enum class OnExhaustion { kReportUnknown, kFail };

  explicit PrecisionBudget(std::size_t max_digits = 64,
                           OnExhaustion on_exhaustion =
                               OnExhaustion::kReportUnknown);

  std::size_t max_digits;
  OnExhaustion on_exhaustion;
};

enum class Comparison { kLess, kEqual, kGreater, kUnknown };

std::string_view to_string(Comparison c);

// sigma(x) = 0 for x < 0, x on [0,1], 1 for x > 1.
Rational saturated_sigma(const Rational& x);
// Maps an enclosure endpoint-wise. With kFail, an enclosure straddling 0 or 1
// raises UnknownSign.
ExactValue saturated_sigma(const ExactValue& x,
                           const PrecisionBudget& budget = PrecisionBudget());
ExactValue saturated_sigma(const ExactScalar& x,
                           const PrecisionBudget& budget = PrecisionBudget());

// signal(x) = 0 for x <= 0, 1 otherwise. UnknownSign when an enclosure
// contains 0 in its interior or touches it from above.
int signal(const Rational& x);
int signal(const ExactValue& x);
int signal(const ExactScalar& x,
           const PrecisionBudget& budget = PrecisionBudget());

// sum_j weights[j]*states[j] + sum_j input_weights[j]*inputs[j] + bias.
// Exact for exact operands. Lazy scalars are expanded far enough that their
// combined contribution to the enclosure width is at most
// 2^-budget.max_digits (for point-valued states).
ExactValue affine_combine(std::span<const ExactScalar> weights,
                          std::span<const ExactValue> states,
                          std::span<const ExactScalar> input_weights,
                          std::span<const int> inputs, const ExactScalar& bias,
                          const PrecisionBudget& budget = PrecisionBudget());

// Exact for exact pairs. Lazy values are compared through enclosures of
// width 2^-budget.max_digits; Equal is reported for two lazy values only
// when they are the same stream.
Comparison compare_with_precision(const ExactScalar& x, const ExactScalar& y,
                                  const PrecisionBudget& budget);

}  // namespace arnn
