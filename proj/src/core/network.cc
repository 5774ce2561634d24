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

#include "arnn/core/network.h"

#include "arnn/error.h"

namespace arnn {

Network::Network(std::size_t neurons, std::size_t inputs)
    : neurons_(neurons),
      inputs_(inputs),
      state_weights_(neurons * neurons),
      input_weights_(neurons * (inputs + 1)),
      biases_(neurons),
      activations_(neurons, Activation::kSaturatedLinear) {
  if (neurons == 0) fail(ErrorCode::kShapeError, "a network needs a neuron");
}

void Network::check_neuron(std::size_t i) const {
  if (i >= neurons_) {
    fail(ErrorCode::kShapeError, "neuron " + std::to_string(i) +
                                     " out of range (N = " +
                                     std::to_string(neurons_) + ")");
  }
}

const ExactScalar& Network::state_weight(std::size_t i, std::size_t j) const {
  check_neuron(i);
  check_neuron(j);
  return state_weights_[i * neurons_ + j];
}

void Network::set_state_weight(std::size_t i, std::size_t j, ExactScalar w) {
  check_neuron(i);
  check_neuron(j);
  state_weights_[i * neurons_ + j] = std::move(w);
}

const ExactScalar& Network::input_weight(std::size_t i,
                                         std::size_t column) const {
  check_neuron(i);
  if (column > inputs_) {
    fail(ErrorCode::kShapeError,
         "input column " + std::to_string(column) + " out of range");
  }
  return input_weights_[i * (inputs_ + 1) + column];
}

void Network::set_input_weight(std::size_t i, std::size_t column,
                               ExactScalar w) {
  check_neuron(i);
  if (column > inputs_) {
    fail(ErrorCode::kShapeError,
         "input column " + std::to_string(column) + " out of range");
  }
  input_weights_[i * (inputs_ + 1) + column] = std::move(w);
}

const ExactScalar& Network::bias(std::size_t i) const {
  check_neuron(i);
  return biases_[i];
}

void Network::set_bias(std::size_t i, ExactScalar c) {
  check_neuron(i);
  biases_[i] = std::move(c);
}

Activation Network::activation(std::size_t i) const {
  check_neuron(i);
  return activations_[i];
}

void Network::set_activation(std::size_t i, Activation act) {
  check_neuron(i);
  activations_[i] = act;
}

void Network::set_outputs(std::size_t data, std::size_t valid,
                          std::optional<std::size_t> flag) {
  check_neuron(data);
  check_neuron(valid);
  if (flag) check_neuron(*flag);
  out_data_ = data;
  out_valid_ = valid;
  out_flag_ = flag;
}

void Network::set_alphabet(Alphabet alphabet) {
  if (alphabet.size() != inputs_) {
    fail(ErrorCode::kShapeError,
         "alphabet of " + std::to_string(alphabet.size()) +
             " symbols for " + std::to_string(inputs_) + " data lines");
  }
  alphabet_ = std::move(alphabet);
}

std::vector<const ExactScalar*> Network::scalars() const {
  std::vector<const ExactScalar*> out;
  out.reserve(state_weights_.size() + input_weights_.size() + biases_.size());
  for (const auto& w : state_weights_) out.push_back(&w);
  for (const auto& w : input_weights_) out.push_back(&w);
  for (const auto& c : biases_) out.push_back(&c);
  return out;
}

}  // namespace arnn
