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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arnn/degrees/degree_label.h"
#include "arnn/numerics/rational.h"

namespace arnn {

// What digit_at returns past a finite horizon.
enum class HorizonPolicy {
  kZeroPad,  // finite expansion; later digits are 0
  kStrict,   // truncated oracle; later digits are unknown
};

// A real in [0,1) given by a demand-driven base-2 or base-4 digit stream.
//
// Digits are produced in order by a generator and memoized, so queries are
// deterministic and may arrive in any order. Copies share the memo: a
// UnitReal is single-owner mutable state as far as concurrency goes; use
// snapshot() to obtain a frozen prefix that can be shared read-only.
class UnitReal {
 public:
  // Called once per digit, in order, starting at digit 1.
  using Generator = std::function<int()>;

  static UnitReal from_generator(int base, Generator next,
                                 std::optional<std::size_t> horizon = {},
                                 HorizonPolicy policy = HorizonPolicy::kZeroPad);
  // Digit n depends only on n.
  static UnitReal from_index_function(
      int base, std::function<int(std::size_t)> digit,
      std::optional<std::size_t> horizon = {},
      HorizonPolicy policy = HorizonPolicy::kZeroPad);
  static UnitReal from_digits(int base, std::vector<int> digits,
                              HorizonPolicy policy = HorizonPolicy::kZeroPad);
  // Parses a digit string such as "0100"; horizon is its length.
  static UnitReal from_digit_string(int base, const std::string& digits,
                                    HorizonPolicy policy =
                                        HorizonPolicy::kZeroPad);
  // Long division; requires 0 <= q < 1. No horizon.
  static UnitReal from_rational(const Rational& q, int base = 2);
  // All digits 0, no horizon.
  static UnitReal zero(int base = 2);

  int base() const { return state_->base; }
  std::optional<std::size_t> horizon() const { return state_->horizon; }
  HorizonPolicy policy() const { return state_->policy; }

  // n >= 1. Past the horizon: 0 under kZeroPad, HorizonExceeded under
  // kStrict.
  int digit_at(std::size_t n) const;

  // Sum of the first k digits scaled by base^-i.
  Rational prefix_value(std::size_t k) const;

  // The exact value when the stream is a finite zero-padded expansion.
  std::optional<Rational> exact_value() const;

  std::string digit_string(std::size_t n) const;

  // First n digits materialized into an independent stream with horizon n.
  UnitReal snapshot(std::size_t n) const;

  // True when both handles refer to the same underlying stream.
  bool same_stream(const UnitReal& other) const {
    return state_ == other.state_;
  }

  const std::optional<DegreeLabel>& label() const { return label_; }
  UnitReal with_label(DegreeLabel label) const;

 private:
  struct State {
    int base = 2;
    Generator next;
    std::vector<int> memo;
    std::optional<std::size_t> horizon;
    HorizonPolicy policy = HorizonPolicy::kZeroPad;
  };

  explicit UnitReal(std::shared_ptr<State> state) : state_(std::move(state)) {}

  std::shared_ptr<State> state_;
  std::optional<DegreeLabel> label_;
};

}  // namespace arnn
