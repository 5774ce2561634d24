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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "arnn/numerics/exact_scalar.h"
#include "arnn/numerics/rational.h"

namespace arnn {

// sum_i d_i 4^-i with d_i = 2 b_i + 1; the empty string encodes 0.
Rational cantor_encode(std::span<const int> bits);

// Plain binary packing sum_i b_i 2^-i, the straight encoding.
Rational binary_encode(std::span<const int> bits);

Rational pack_bits(std::span<const int> bits, Packing packing);

// Finite base-4 expansion with every digit in {1,3}.
bool is_cantor4(const Rational& x);

struct CantorStep {
  int bit;
  Rational remainder;
};

// Pops the leading bit: bit = signal(4x - 2), remainder =
// sigma(4x - 2 bit - 1). nullopt for 0; EncodingError when x is not a valid
// Cantor-4 value.
std::optional<CantorStep> cantor_decode_step(const Rational& x);

// Folds cantor_decode_step until the encoding is empty.
std::vector<int> cantor_decode(const Rational& x);

// "0110" <-> {0,1,1,0}; ParseError on other characters.
std::vector<int> parse_bits(std::string_view text);

}  // namespace arnn
