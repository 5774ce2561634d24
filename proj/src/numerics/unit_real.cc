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

#include "arnn/numerics/unit_real.h"

#include "arnn/error.h"

namespace arnn {
namespace {

void check_base(int base) {
  if (base != 2 && base != 4) {
    fail(ErrorCode::kConfigError,
         "digit streams use base 2 or 4, got " + std::to_string(base));
  }
}

}  // namespace

UnitReal UnitReal::from_generator(int base, Generator next,
                                  std::optional<std::size_t> horizon,
                                  HorizonPolicy policy) {
  check_base(base);
  auto state = std::make_shared<State>();
  state->base = base;
  state->next = std::move(next);
  state->horizon = horizon;
  state->policy = policy;
  return UnitReal(std::move(state));
}

UnitReal UnitReal::from_index_function(int base,
                                       std::function<int(std::size_t)> digit,
                                       std::optional<std::size_t> horizon,
                                       HorizonPolicy policy) {
  auto counter = std::make_shared<std::size_t>(0);
  return from_generator(
      base,
      [digit = std::move(digit), counter]() { return digit(++*counter); },
      horizon, policy);
}

UnitReal UnitReal::from_digits(int base, std::vector<int> digits,
                               HorizonPolicy policy) {
  check_base(base);
  for (int d : digits) {
    if (d < 0 || d >= base) {
      fail(ErrorCode::kEncodingError,
           "digit " + std::to_string(d) + " outside base " +
               std::to_string(base));
    }
  }
  auto state = std::make_shared<State>();
  state->base = base;
  state->horizon = digits.size();
  state->memo = std::move(digits);
  state->policy = policy;
  return UnitReal(std::move(state));
}

UnitReal UnitReal::from_digit_string(int base, const std::string& digits,
                                     HorizonPolicy policy) {
  std::vector<int> values;
  values.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      fail(ErrorCode::kParseError,
           std::string("not a digit: '") + c + "'");
    }
    values.push_back(c - '0');
  }
  return from_digits(base, std::move(values), policy);
}

UnitReal UnitReal::from_rational(const Rational& q, int base) {
  if (q < 0 || q >= 1) {
    fail(ErrorCode::kConfigError, "unit reals lie in [0,1), got " +
                                      to_string(q));
  }
  auto remainder = std::make_shared<Rational>(q);
  return from_generator(base, [remainder, base]() {
    *remainder *= base;
    BigInt digit = remainder->get_num() / remainder->get_den();
    *remainder -= digit;
    return static_cast<int>(digit.get_si());
  });
}

UnitReal UnitReal::zero(int base) {
  return from_generator(base, [] { return 0; });
}

int UnitReal::digit_at(std::size_t n) const {
  if (n == 0) fail(ErrorCode::kConfigError, "digit positions start at 1");
  State& s = *state_;
  if (s.horizon && n > *s.horizon) {
    if (s.policy == HorizonPolicy::kStrict) {
      fail(ErrorCode::kHorizonExceeded,
           "digit " + std::to_string(n) + " requested past horizon " +
               std::to_string(*s.horizon));
    }
    return 0;
  }
  while (s.memo.size() < n) {
    int d = s.next();
    if (d < 0 || d >= s.base) {
      fail(ErrorCode::kEncodingError,
           "generator produced digit " + std::to_string(d) + " in base " +
               std::to_string(s.base));
    }
    s.memo.push_back(d);
  }
  return s.memo[n - 1];
}

Rational UnitReal::prefix_value(std::size_t k) const {
  if (horizon() && policy() == HorizonPolicy::kZeroPad && k > *horizon()) {
    k = *horizon();
  }
  BigInt numerator = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    numerator = numerator * base() + digit_at(i);
  }
  return make_rational(numerator, power_of(base(), k));
}

std::optional<Rational> UnitReal::exact_value() const {
  if (horizon() && policy() == HorizonPolicy::kZeroPad) {
    return prefix_value(*horizon());
  }
  return std::nullopt;
}

std::string UnitReal::digit_string(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(static_cast<char>('0' + digit_at(i)));
  }
  return out;
}

UnitReal UnitReal::snapshot(std::size_t n) const {
  std::vector<int> digits;
  digits.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) digits.push_back(digit_at(i));
  UnitReal frozen = from_digits(base(), std::move(digits), policy());
  frozen.label_ = label_;
  return frozen;
}

UnitReal UnitReal::with_label(DegreeLabel label) const {
  UnitReal copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

}  // namespace arnn
