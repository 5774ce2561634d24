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
#include <istream>
#include <set>
#include <string>
#include <vector>

#include "arnn/core/network.h"
#include "arnn/degrees/degree_label.h"
#include "arnn/numerics/exact_scalar.h"

namespace arnn {

// A finite partial order of degree labels. "0" is always present and below
// every other label; `below` relations are closed transitively and may
// never form a cycle.
class DegreeOrder {
 public:
  // Just "0".
  DegreeOrder();
  // 0 < 0' < 0''.
  static DegreeOrder builtin();

  // Lines `label <name>` and `below <a> <b>` extending the built-in order.
  // Labels named in a `below` line must be declared first.
  static DegreeOrder parse(std::istream& in);
  static DegreeOrder load(const std::string& path);

  // Declaring an existing label is a no-op.
  void add_label(const DegreeLabel& label);
  // a strictly below b. LatticeError for unknown labels or a cycle.
  void add_below(const DegreeLabel& a, const DegreeLabel& b);

  bool contains(const DegreeLabel& label) const;
  // Strict order; LatticeError for unknown labels.
  bool below(const DegreeLabel& a, const DegreeLabel& b) const;
  const std::vector<DegreeLabel>& labels() const { return labels_; }

 private:
  std::size_t id(const DegreeLabel& label) const;

  std::vector<DegreeLabel> labels_;
  std::vector<std::vector<bool>> below_;  // below_[a][b]: a < b
};

// The labels with nothing in the set strictly above them.
std::set<DegreeLabel> maximals(const std::set<DegreeLabel>& labels,
                               const DegreeOrder& order);

struct PowerClass {
  enum class Kind { kAtMostBoundedAutomata, kAtMostTuring, kOracleDegrees };
  Kind kind = Kind::kAtMostBoundedAutomata;
  // Nonempty and pairwise incomparable for kOracleDegrees, else empty.
  std::set<DegreeLabel> degrees;

  friend bool operator==(const PowerClass&, const PowerClass&) = default;
};

// "AtMostBoundedAutomata", "AtMostTuring", "OracleDegrees(0', a)".
std::string to_string(const PowerClass& power);

// Integer/Rational: "0". Stream: its label, "0" when unlabeled. Oracle:
// its label; LabelMissing when unlabeled.
DegreeLabel scalar_degree(const ExactScalar& x);

// Integer weights only and no timing labels: bounded automata. Otherwise,
// when every lazy weight and timing label is "0": Turing. Otherwise the
// maximal degrees of the lazy weight labels and timing labels.
// LabelMissing for an unlabeled lazy weight, LatticeError for a label the
// order does not know.
PowerClass classify_network(const Network& net,
                            const std::set<DegreeLabel>& timing_labels,
                            const DegreeOrder& order);

}  // namespace arnn
