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

#include "arnn/compilers/compose.h"

#include <string>

#include "arnn/error.h"
#include "compilers/net_builder.h"

namespace arnn {

namespace {

// Adds w to an entry that may already hold a weight.
void accumulate(Network& net, std::size_t i, std::size_t j,
                const ExactScalar& w) {
  if (w.is_zero()) return;
  const ExactScalar& current = net.state_weight(i, j);
  if (current.is_zero()) {
    net.set_state_weight(i, j, w);
    return;
  }
  if (current.is_lazy() || w.is_lazy()) {
    fail(ErrorCode::kConstructionError,
         "two lazy contributions to one composed weight");
  }
  net.set_state_weight(
      i, j, scalar_of(current.exact_value().value() + w.exact_value().value()));
}

}  // namespace

Network compose_nets(const Network& first, const Network& second,
                     const Handoff& handoff) {
  if (handoff.data_lines.size() != second.inputs()) {
    fail(ErrorCode::kShapeError,
         "handoff maps " + std::to_string(handoff.data_lines.size()) +
             " lines onto a net with " + std::to_string(second.inputs()) +
             " data lines");
  }
  for (std::size_t line : handoff.data_lines) {
    if (line != 0) {
      fail(ErrorCode::kShapeError,
           "first net has one output data line, handoff names line " +
               std::to_string(line));
    }
  }
  const std::size_t n1 = first.neurons();
  const std::size_t n2 = second.neurons();
  Network net(n1 + n2, first.inputs());
  for (std::size_t i = 0; i < n1; ++i) {
    net.set_activation(i, first.activation(i));
    net.set_bias(i, first.bias(i));
    for (std::size_t j = 0; j < n1; ++j) {
      net.set_state_weight(i, j, first.state_weight(i, j));
    }
    for (std::size_t c = 0; c <= first.inputs(); ++c) {
      net.set_input_weight(i, c, first.input_weight(i, c));
    }
  }
  for (std::size_t i = 0; i < n2; ++i) {
    net.set_activation(n1 + i, second.activation(i));
    net.set_bias(n1 + i, second.bias(i));
    for (std::size_t j = 0; j < n2; ++j) {
      net.set_state_weight(n1 + i, n1 + j, second.state_weight(i, j));
    }
    for (std::size_t c = 0; c < second.inputs(); ++c) {
      accumulate(net, n1 + i, first.out_data(), second.input_weight(i, c));
    }
    accumulate(net, n1 + i, first.out_valid(),
               second.input_weight(i, second.validation_column()));
  }
  std::optional<std::size_t> flag;
  if (second.out_flag()) flag = n1 + *second.out_flag();
  net.set_outputs(n1 + second.out_data(), n1 + second.out_valid(), flag);
  if (first.alphabet()) net.set_alphabet(*first.alphabet());
  return net;
}

Handoff single_line_handoff(std::size_t second_inputs) {
  return Handoff{std::vector<std::size_t>(second_inputs, 0)};
}

Network identity_net() {
  Network net(2, 1);
  net.set_activation(0, Activation::kSignal);
  net.set_activation(1, Activation::kSignal);
  net.set_input_weight(0, 0, ExactScalar::integer(1));
  net.set_input_weight(1, 1, ExactScalar::integer(1));
  net.set_outputs(0, 1);
  net.set_alphabet(Alphabet("1"));
  return net;
}

}  // namespace arnn
