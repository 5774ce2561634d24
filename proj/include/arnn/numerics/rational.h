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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace arnn {

using BigInt = mpz_class;
// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

Rational make_rational(const BigInt& numerator, const BigInt& denominator);

// "p/q"; integers print as "p/1" so every rational has one spelling.
std::string to_string(const Rational& q);

// Accepts "p/q" or "p" with an optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

BigInt power_of(unsigned long base, std::size_t exponent);

// Smallest k with 2^k >= |q| (0 for |q| <= 1).
std::size_t log2_ceil_magnitude(const Rational& q);

}  // namespace arnn
