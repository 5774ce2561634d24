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
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace arnn {

// Finite truncation of a characteristic function: bit v(i) for every string
// index i in 1..horizon. Stands in for a possibly non-computable oracle.
class OracleTable {
 public:
  OracleTable() = default;
  // Must be total on 1..horizon with no key beyond it (ShapeError).
  OracleTable(const std::map<std::size_t, int>& entries, std::size_t horizon);

  static OracleTable from_bits(const std::vector<int>& bits);
  // "0100..." with bit i at position i-1.
  static OracleTable from_bit_string(const std::string& bits);

  std::size_t horizon() const { return bits_.size(); }
  // index >= 1; HorizonExceeded past the horizon.
  int bit(std::size_t index) const;
  std::vector<int> bits() const;
  std::string bit_string() const;

  // Text form: "horizon <n>" then one "index <i> <bit>" line per entry.
  static OracleTable parse(std::istream& in);
  static OracleTable load(const std::string& path);
  std::string serialize() const;

  friend bool operator==(const OracleTable&, const OracleTable&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace arnn
