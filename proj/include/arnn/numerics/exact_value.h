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

#include <string>

#include "arnn/numerics/rational.h"

namespace arnn {

// An exact rational point, or a closed interval [lo, hi] with rational ends
// enclosing a value known only to finite precision.
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(const Rational& q) : lo_(q), hi_(q) {}  // NOLINT: implicit

  static ExactValue point(const Rational& q) { return ExactValue(q); }
  // Requires lo <= hi.
  static ExactValue between(const Rational& lo, const Rational& hi);

  bool is_point() const { return lo_ == hi_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  // Requires is_point().
  const Rational& value() const;
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }

  ExactValue operator+(const ExactValue& other) const;
  ExactValue operator*(const ExactValue& other) const;
  ExactValue& operator+=(const ExactValue& other);

  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
};

// "p/q" for points, "[p/q, r/s]" for enclosures.
std::string to_string(const ExactValue& v);

}  // namespace arnn
