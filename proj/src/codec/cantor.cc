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

#include "arnn/codec/cantor.h"

#include <string>

#include "arnn/error.h"
#include "arnn/numerics/activation.h"

namespace arnn {
namespace {

void check_bit(int b) {
  if (b != 0 && b != 1) {
    fail(ErrorCode::kEncodingError, "not a bit: " + std::to_string(b));
  }
}

}  // namespace

Rational cantor_encode(std::span<const int> bits) {
  BigInt numerator = 0;
  for (int b : bits) {
    check_bit(b);
    numerator = numerator * 4 + (2 * b + 1);
  }
  return make_rational(numerator, power_of(4, bits.size()));
}

Rational binary_encode(std::span<const int> bits) {
  BigInt numerator = 0;
  for (int b : bits) {
    check_bit(b);
    numerator = numerator * 2 + b;
  }
  return make_rational(numerator, power_of(2, bits.size()));
}

Rational pack_bits(std::span<const int> bits, Packing packing) {
  return packing == Packing::kCantor4 ? cantor_encode(bits)
                                      : binary_encode(bits);
}

bool is_cantor4(const Rational& x) {
  if (sgn(x) < 0 || x >= 1) return false;
  if (sgn(x) == 0) return true;
  // Denominator must be exactly 4^k and the k base-4 digits of the
  // numerator must all be odd (1 or 3).
  const BigInt& den = x.get_den();
  std::size_t twos = mpz_scan1(den.get_mpz_t(), 0);
  if (twos % 2 != 0 || den != power_of(2, twos)) return false;
  BigInt num = x.get_num();
  for (std::size_t i = 0; i < twos / 2; ++i) {
    unsigned long digit = mpz_fdiv_ui(num.get_mpz_t(), 4);
    if (digit != 1 && digit != 3) return false;
    num /= 4;
  }
  return num == 0;
}

std::optional<CantorStep> cantor_decode_step(const Rational& x) {
  if (!is_cantor4(x)) {
    fail(ErrorCode::kEncodingError,
         to_string(x) + " is not a Cantor-4 encoding");
  }
  if (sgn(x) == 0) return std::nullopt;
  Rational four_x = 4 * x;
  int bit = signal(Rational(four_x - 2));
  Rational remainder = saturated_sigma(Rational(four_x - 2 * bit - 1));
  return CantorStep{bit, remainder};
}

std::vector<int> cantor_decode(const Rational& x) {
  std::vector<int> bits;
  Rational rest = x;
  while (auto step = cantor_decode_step(rest)) {
    bits.push_back(step->bit);
    rest = step->remainder;
  }
  return bits;
}

std::vector<int> parse_bits(std::string_view text) {
  std::vector<int> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      fail(ErrorCode::kParseError, std::string("not a bit: '") + c + "'");
    }
    bits.push_back(c - '0');
  }
  return bits;
}

}  // namespace arnn
