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

#include "arnn/numerics/exact_value.h"

#include <algorithm>

#include "arnn/error.h"

namespace arnn {

ExactValue ExactValue::between(const Rational& lo, const Rational& hi) {
  if (hi < lo) {
    fail(ErrorCode::kConfigError,
         "empty interval [" + to_string(lo) + ", " + to_string(hi) + "]");
  }
  ExactValue v;
  v.lo_ = lo;
  v.hi_ = hi;
  return v;
}

const Rational& ExactValue::value() const {
  if (!is_point()) {
    fail(ErrorCode::kUnknownSign, "value is only known as an enclosure " +
                                      arnn::to_string(*this));
  }
  return lo_;
}

ExactValue ExactValue::operator+(const ExactValue& other) const {
  ExactValue sum = *this;
  sum += other;
  return sum;
}

ExactValue& ExactValue::operator+=(const ExactValue& other) {
  lo_ += other.lo_;
  hi_ += other.hi_;
  return *this;
}

ExactValue ExactValue::operator*(const ExactValue& other) const {
  if (is_point() && other.is_point()) return ExactValue(Rational(lo_ * other.lo_));
  Rational a = lo_ * other.lo_;
  Rational b = lo_ * other.hi_;
  Rational c = hi_ * other.lo_;
  Rational d = hi_ * other.hi_;
  return between(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

std::string to_string(const ExactValue& v) {
  if (v.is_point()) return to_string(v.lo());
  return "[" + to_string(v.lo()) + ", " + to_string(v.hi()) + "]";
}

}  // namespace arnn
