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

#include "arnn/numerics/exact_scalar.h"

#include "arnn/error.h"

namespace arnn {
namespace {

void check_exact_label(const std::optional<DegreeLabel>& label) {
  if (label && !label->is_bottom()) {
    fail(ErrorCode::kLatticeError,
         "integer and rational scalars are computable; label '" +
             label->name() + "' is not allowed");
  }
}

UnitReal oracle_digits(const OracleTable& table, Packing packing) {
  std::vector<int> digits = table.bits();
  if (packing == Packing::kCantor4) {
    for (int& d : digits) d = 2 * d + 1;
  }
  return UnitReal::from_digits(packing == Packing::kCantor4 ? 4 : 2,
                               std::move(digits), HorizonPolicy::kStrict);
}

}  // namespace

std::string to_string(Packing packing) {
  return packing == Packing::kCantor4 ? "cantor4" : "binary";
}

Packing parse_packing(const std::string& text) {
  if (text == "cantor4" || text == "cantor") return Packing::kCantor4;
  if (text == "binary") return Packing::kBinary;
  fail(ErrorCode::kParseError, "unknown packing '" + text + "'");
}

ExactScalar ExactScalar::integer(const BigInt& value) {
  ExactScalar x;
  x.value_ = value;
  return x;
}

ExactScalar ExactScalar::rational(const Rational& value) {
  ExactScalar x;
  Rational q = value;
  q.canonicalize();
  x.value_ = q;
  return x;
}

ExactScalar ExactScalar::stream(const UnitReal& digits,
                                std::optional<DegreeLabel> label) {
  ExactScalar x;
  x.value_ = digits;
  x.label_ = label ? label : digits.label();
  return x;
}

ExactScalar ExactScalar::oracle(std::shared_ptr<const OracleTable> table,
                                Packing packing,
                                std::optional<DegreeLabel> label) {
  if (!table) fail(ErrorCode::kConfigError, "oracle scalar without a table");
  ExactScalar x;
  UnitReal digits = oracle_digits(*table, packing);
  x.value_ = Oracle{std::move(table), packing, std::move(digits)};
  x.label_ = std::move(label);
  return x;
}

bool ExactScalar::is_zero() const {
  switch (kind()) {
    case Kind::kInteger: return as_integer() == 0;
    case Kind::kRational: return as_rational() == 0;
    default: return false;
  }
}

const UnitReal& ExactScalar::digits() const {
  if (kind() == Kind::kStream) return as_stream();
  if (kind() == Kind::kOracle) return as_oracle().digits;
  fail(ErrorCode::kConfigError, "scalar " + to_string() + " has no digit stream");
}

std::optional<Rational> ExactScalar::exact_value() const {
  switch (kind()) {
    case Kind::kInteger: return Rational(as_integer());
    case Kind::kRational: return as_rational();
    case Kind::kStream: return as_stream().exact_value();
    case Kind::kOracle: {
      const UnitReal& d = as_oracle().digits;
      return d.prefix_value(*d.horizon());
    }
  }
  return std::nullopt;
}

ExactValue ExactScalar::enclose(std::size_t bits) const {
  if (auto exact = exact_value()) return ExactValue(*exact);
  const UnitReal& d = digits();
  // base^-k <= 2^-bits
  std::size_t k = d.base() == 4 ? (bits + 1) / 2 : bits;
  Rational lo = d.prefix_value(k);
  Rational hi = lo + make_rational(1, power_of(d.base(), k));
  return ExactValue::between(lo, hi);
}

ExactScalar ExactScalar::with_label(DegreeLabel label) const {
  if (!is_lazy()) check_exact_label(label);
  ExactScalar copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

std::string ExactScalar::to_string() const {
  std::string text;
  switch (kind()) {
    case Kind::kInteger: text = as_integer().get_str(); break;
    case Kind::kRational: text = arnn::to_string(as_rational()); break;
    case Kind::kStream: {
      const UnitReal& d = as_stream();
      text = "stream(base " + std::to_string(d.base());
      if (d.horizon()) text += ", horizon " + std::to_string(*d.horizon());
      text += ")";
      break;
    }
    case Kind::kOracle:
      text = "oracle(" + arnn::to_string(as_oracle().packing) + ", horizon " +
             std::to_string(as_oracle().table->horizon()) + ")";
      break;
  }
  if (label_) text += " " + label_->name();
  return text;
}

}  // namespace arnn
