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
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "arnn/codec/oracle_table.h"
#include "arnn/degrees/degree_label.h"
#include "arnn/numerics/exact_value.h"
#include "arnn/numerics/rational.h"
#include "arnn/numerics/unit_real.h"

namespace arnn {

// How the bits of an oracle table become digits of a unit real.
enum class Packing {
  kBinary,   // bit b -> binary digit b
  kCantor4,  // bit b -> base-4 digit 2b+1
};

std::string to_string(Packing packing);
Packing parse_packing(const std::string& text);

// A weight, bias or constant of a network. Integers and rationals are
// exact; streams and oracles are unit reals known digit by digit and may
// carry a declared degree label.
class ExactScalar {
 public:
  enum class Kind { kInteger, kRational, kStream, kOracle };

  struct Oracle {
    std::shared_ptr<const OracleTable> table;
    Packing packing = Packing::kCantor4;
    UnitReal digits;
  };

  ExactScalar() : value_(BigInt(0)) {}
  ExactScalar(long value) : value_(BigInt(value)) {}  // NOLINT: implicit

  static ExactScalar integer(const BigInt& value);
  static ExactScalar rational(const Rational& value);
  // Label defaults to the stream's own label.
  static ExactScalar stream(const UnitReal& digits,
                            std::optional<DegreeLabel> label = {});
  static ExactScalar oracle(std::shared_ptr<const OracleTable> table,
                            Packing packing,
                            std::optional<DegreeLabel> label = {});

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_lazy() const {
    return kind() == Kind::kStream || kind() == Kind::kOracle;
  }
  bool is_zero() const;

  const BigInt& as_integer() const { return std::get<BigInt>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const UnitReal& as_stream() const { return std::get<UnitReal>(value_); }
  const Oracle& as_oracle() const { return std::get<Oracle>(value_); }

  // Digit source for Stream and Oracle scalars.
  const UnitReal& digits() const;

  // The value as a rational when it is known exactly: integers, rationals,
  // finite zero-padded streams, and oracles (whose value is the finite
  // expansion of the truncated table).
  std::optional<Rational> exact_value() const;

  // Enclosure of width at most 2^-bits.
  ExactValue enclose(std::size_t bits) const;

  // Integer and Rational scalars carry at most the bottom label.
  const std::optional<DegreeLabel>& label() const { return label_; }
  ExactScalar with_label(DegreeLabel label) const;

  // Human-readable form, e.g. "3", "1/4", "oracle(cantor4, horizon 25) 0'".
  std::string to_string() const;

 private:
  std::variant<BigInt, Rational, UnitReal, Oracle> value_;
  std::optional<DegreeLabel> label_;
};

}  // namespace arnn
