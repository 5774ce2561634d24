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

#include "compilers/net_builder.h"

#include "arnn/error.h"

namespace arnn {

ExactScalar scalar_of(const Rational& value) {
  if (value.get_den() == 1) {
    return ExactScalar::integer(value.get_num());
  }
  return ExactScalar::rational(value);
}

std::size_t NetBuilder::add(Activation act) {
  activations_.push_back(act);
  return activations_.size() - 1;
}

void NetBuilder::weight(std::size_t i, std::size_t j, const Rational& w) {
  state_[{i, j}] += w;
}

void NetBuilder::input(std::size_t i, std::size_t column, const Rational& w) {
  input_[{i, column}] += w;
}

void NetBuilder::bias(std::size_t i, const Rational& c) { bias_[i] += c; }

void NetBuilder::lazy_weight(std::size_t i, std::size_t j, ExactScalar w) {
  if (!lazy_.emplace(std::pair{i, j}, std::move(w)).second) {
    fail(ErrorCode::kConstructionError, "lazy weight set twice");
  }
}

Network NetBuilder::build() const {
  Network net(activations_.size(), inputs_);
  for (std::size_t i = 0; i < activations_.size(); ++i) {
    net.set_activation(i, activations_[i]);
  }
  for (const auto& [key, w] : state_) {
    if (w != 0) {
      if (lazy_.count(key)) {
        fail(ErrorCode::kConstructionError,
             "lazy weight entry also has a rational part");
      }
      net.set_state_weight(key.first, key.second, scalar_of(w));
    }
  }
  for (const auto& [key, w] : lazy_) {
    net.set_state_weight(key.first, key.second, w);
  }
  for (const auto& [key, w] : input_) {
    if (w != 0) {
      net.set_input_weight(key.first, key.second, scalar_of(w));
    }
  }
  for (const auto& [i, c] : bias_) {
    if (c != 0) {
      net.set_bias(i, scalar_of(c));
    }
  }
  return net;
}

}  // namespace arnn
