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

#include "arnn/degrees/degree_order.h"

#include <fstream>

#include "arnn/error.h"
#include "arnn/util/text.h"

namespace arnn {

DegreeOrder::DegreeOrder() { add_label(DegreeLabel::bottom()); }

DegreeOrder DegreeOrder::builtin() {
  DegreeOrder order;
  DegreeLabel jump = DegreeLabel::jump();
  DegreeLabel double_jump("0''");
  order.add_label(jump);
  order.add_label(double_jump);
  order.add_below(jump, double_jump);
  return order;
}

DegreeOrder DegreeOrder::parse(std::istream& in) {
  DegreeOrder order = builtin();
  for (const auto& record : read_records(in)) {
    const auto& f = record.fields;
    const std::string where = "line " + std::to_string(record.number) + ": ";
    if (f[0] == "label" && f.size() == 2) {
      order.add_label(DegreeLabel(f[1]));
    } else if (f[0] == "below" && f.size() == 3) {
      order.add_below(DegreeLabel(f[1]), DegreeLabel(f[2]));
    } else {
      fail(ErrorCode::kParseError, where + "unrecognized lattice record");
    }
  }
  return order;
}

DegreeOrder DegreeOrder::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open lattice file " + path);
  return parse(in);
}

void DegreeOrder::add_label(const DegreeLabel& label) {
  if (contains(label)) return;
  for (auto& row : below_) row.push_back(false);
  labels_.push_back(label);
  below_.emplace_back(labels_.size(), false);
  if (!label.is_bottom()) below_[id(DegreeLabel::bottom())].back() = true;
}

void DegreeOrder::add_below(const DegreeLabel& a, const DegreeLabel& b) {
  std::size_t x = id(a);
  std::size_t y = id(b);
  if (x == y || below_[y][x]) {
    fail(ErrorCode::kLatticeError,
         "declaring " + a.name() + " below " + b.name() + " makes a cycle");
  }
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i != x && !below_[i][x]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == y || below_[y][j]) below_[i][j] = true;
    }
  }
}

bool DegreeOrder::contains(const DegreeLabel& label) const {
  for (const auto& l : labels_) {
    if (l == label) return true;
  }
  return false;
}

bool DegreeOrder::below(const DegreeLabel& a, const DegreeLabel& b) const {
  return below_[id(a)][id(b)];
}

std::size_t DegreeOrder::id(const DegreeLabel& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  fail(ErrorCode::kLatticeError, "unknown degree label " + label.name());
}

std::set<DegreeLabel> maximals(const std::set<DegreeLabel>& labels,
                               const DegreeOrder& order) {
  std::set<DegreeLabel> result;
  for (const auto& r : labels) {
    bool dominated = false;
    for (const auto& s : labels) {
      if (order.below(r, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.insert(r);
  }
  return result;
}

std::string to_string(const PowerClass& power) {
  switch (power.kind) {
    case PowerClass::Kind::kAtMostBoundedAutomata:
      return "AtMostBoundedAutomata";
    case PowerClass::Kind::kAtMostTuring:
      return "AtMostTuring";
    case PowerClass::Kind::kOracleDegrees:
      break;
  }
  std::string text = "OracleDegrees(";
  bool first = true;
  for (const auto& d : power.degrees) {
    if (!first) text += ", ";
    text += d.name();
    first = false;
  }
  return text + ")";
}

DegreeLabel scalar_degree(const ExactScalar& x) {
  switch (x.kind()) {
    case ExactScalar::Kind::kInteger:
    case ExactScalar::Kind::kRational:
      return DegreeLabel::bottom();
    case ExactScalar::Kind::kStream:
      return x.label().value_or(DegreeLabel::bottom());
    case ExactScalar::Kind::kOracle:
      break;
  }
  if (!x.label()) {
    fail(ErrorCode::kLabelMissing, "oracle scalar has no degree label");
  }
  return *x.label();
}

PowerClass classify_network(const Network& net,
                            const std::set<DegreeLabel>& timing_labels,
                            const DegreeOrder& order) {
  bool integers_only = true;
  std::set<DegreeLabel> labels = timing_labels;
  for (const ExactScalar* x : net.scalars()) {
    switch (x->kind()) {
      case ExactScalar::Kind::kInteger:
        break;
      case ExactScalar::Kind::kRational:
        integers_only = false;
        break;
      case ExactScalar::Kind::kStream:
      case ExactScalar::Kind::kOracle:
        integers_only = false;
        if (!x->label()) {
          fail(ErrorCode::kLabelMissing,
               "lazy scalar " + x->to_string() + " has no degree label");
        }
        labels.insert(*x->label());
        break;
    }
  }
  for (const auto& label : labels) {
    if (!order.contains(label)) {
      fail(ErrorCode::kLatticeError, "unknown degree label " + label.name());
    }
  }
  PowerClass power;
  if (integers_only && labels.empty()) {
    power.kind = PowerClass::Kind::kAtMostBoundedAutomata;
    return power;
  }
  bool computable = true;
  for (const auto& label : labels) computable = computable && label.is_bottom();
  if (computable) {
    power.kind = PowerClass::Kind::kAtMostTuring;
    return power;
  }
  power.kind = PowerClass::Kind::kOracleDegrees;
  power.degrees = maximals(labels, order);
  return power;
}

}  // namespace arnn
