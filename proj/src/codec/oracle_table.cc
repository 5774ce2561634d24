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

#include "arnn/codec/oracle_table.h"

#include <fstream>
#include <sstream>

#include "arnn/error.h"
#include "arnn/util/text.h"

namespace arnn {

OracleTable::OracleTable(const std::map<std::size_t, int>& entries,
                         std::size_t horizon) {
  bits_.assign(horizon, 0);
  if (entries.size() != horizon) {
    fail(ErrorCode::kShapeError,
         "oracle table has " + std::to_string(entries.size()) +
             " entries but horizon " + std::to_string(horizon));
  }
  for (const auto& [index, bit] : entries) {
    if (index == 0 || index > horizon) {
      fail(ErrorCode::kShapeError,
           "oracle index " + std::to_string(index) + " outside 1.." +
               std::to_string(horizon));
    }
    if (bit != 0 && bit != 1) {
      fail(ErrorCode::kEncodingError,
           "oracle bit must be 0 or 1, got " + std::to_string(bit));
    }
    bits_[index - 1] = static_cast<std::uint8_t>(bit);
  }
}

OracleTable OracleTable::from_bits(const std::vector<int>& bits) {
  std::map<std::size_t, int> entries;
  for (std::size_t i = 0; i < bits.size(); ++i) entries[i + 1] = bits[i];
  return OracleTable(entries, bits.size());
}

OracleTable OracleTable::from_bit_string(const std::string& bits) {
  std::vector<int> values;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      fail(ErrorCode::kParseError, std::string("not a bit: '") + c + "'");
    }
    values.push_back(c - '0');
  }
  return from_bits(values);
}

int OracleTable::bit(std::size_t index) const {
  if (index == 0 || index > bits_.size()) {
    fail(ErrorCode::kHorizonExceeded,
         "oracle queried at index " + std::to_string(index) +
             ", horizon is " + std::to_string(bits_.size()));
  }
  return bits_[index - 1];
}

std::vector<int> OracleTable::bits() const {
  return std::vector<int>(bits_.begin(), bits_.end());
}

std::string OracleTable::bit_string() const {
  std::string out;
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

OracleTable OracleTable::parse(std::istream& in) {
  std::map<std::size_t, int> entries;
  std::optional<std::size_t> horizon;
  for (const auto& line : read_records(in)) {
    const auto& f = line.fields;
    if (f[0] == "horizon" && f.size() == 2) {
      horizon = parse_size(f[1], line.number);
    } else if (f[0] == "index" && f.size() == 3) {
      std::size_t index = parse_size(f[1], line.number);
      if (entries.count(index)) {
        fail(ErrorCode::kParseError, "line " + std::to_string(line.number) +
                                         ": duplicate index " + f[1]);
      }
      entries[index] = static_cast<int>(parse_size(f[2], line.number));
    } else {
      fail(ErrorCode::kParseError, "line " + std::to_string(line.number) +
                                       ": unrecognized oracle record");
    }
  }
  if (!horizon) {
    fail(ErrorCode::kParseError, "oracle table has no horizon line");
  }
  return OracleTable(entries, *horizon);
}

OracleTable OracleTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open oracle table " + path);
  return parse(in);
}

std::string OracleTable::serialize() const {
  std::ostringstream out;
  out << "horizon " << bits_.size() << "\n";
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out << "index " << (i + 1) << " " << int(bits_[i]) << "\n";
  }
  return out.str();
}

}  // namespace arnn
