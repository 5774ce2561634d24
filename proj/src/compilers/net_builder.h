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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arnn/core/network.h"
#include "arnn/numerics/exact_scalar.h"
#include "arnn/numerics/rational.h"

namespace arnn {

// Accumulates exact weights neuron by neuron; repeated contributions to one
// entry are summed. Entries whose denominator is 1 become Integer scalars.
class NetBuilder {
 public:
  explicit NetBuilder(std::size_t inputs) : inputs_(inputs) {}

  std::size_t add(Activation act);
  std::size_t size() const { return activations_.size(); }

  void weight(std::size_t i, std::size_t j, const Rational& w);
  void input(std::size_t i, std::size_t column, const Rational& w);
  void validation(std::size_t i, const Rational& w) { input(i, inputs_, w); }
  void bias(std::size_t i, const Rational& c);
  // A non-rational weight; the entry must receive no other contribution.
  void lazy_weight(std::size_t i, std::size_t j, ExactScalar w);

  Network build() const;

 private:
  std::size_t inputs_;
  std::vector<Activation> activations_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> state_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> input_;
  std::map<std::size_t, Rational> bias_;
  std::map<std::pair<std::size_t, std::size_t>, ExactScalar> lazy_;
};

ExactScalar scalar_of(const Rational& value);

}  // namespace arnn
