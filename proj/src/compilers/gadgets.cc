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

#include "arnn/compilers/gadgets.h"

#include "arnn/error.h"

namespace arnn {

Network push_gadget() {
  Network net(1, 1);
  net.set_state_weight(0, 0, ExactScalar::rational(Rational(1, 4)));
  net.set_input_weight(0, 0, ExactScalar::rational(Rational(1, 2)));
  net.set_bias(0, ExactScalar::rational(Rational(1, 4)));
  net.set_outputs(0, 0);
  return net;
}

Network pop_gadget() {
  Network net(4, 0);
  net.set_activation(0, Activation::kSignal);
  net.set_state_weight(0, 1, ExactScalar::integer(4));
  net.set_bias(0, ExactScalar::integer(-2));
  net.set_state_weight(1, 1, ExactScalar::integer(1));
  net.set_state_weight(2, 1, ExactScalar::integer(4));
  net.set_state_weight(2, 0, ExactScalar::integer(-2));
  net.set_bias(2, ExactScalar::integer(-1));
  net.set_activation(3, Activation::kSignal);
  net.set_state_weight(3, 1, ExactScalar::integer(4));
  net.set_outputs(0, 3);
  return net;
}

Network pop_one_gadget() {
  Network net(1, 0);
  net.set_state_weight(0, 0, ExactScalar::integer(4));
  net.set_bias(0, ExactScalar::integer(-3));
  net.set_outputs(0, 0);
  return net;
}

Rational run_push_gadget(const std::vector<int>& bits) {
  Network net = push_gadget();
  Simulator sim(net);
  NetworkState state = NetworkState::zero(1);
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    if (*it != 0 && *it != 1) fail(ErrorCode::kEncodingError, "bit not 0/1");
    state = sim.step(state, InputFrame{{*it}, 1});
  }
  return state.values[0].value();
}

std::optional<CantorStep> run_pop_gadget(const Rational& x) {
  Network net = pop_gadget();
  Simulator sim(net);
  NetworkState state = NetworkState::zero(4);
  state.values[1] = x;
  InputFrame idle{{}, 0};
  state = sim.step(sim.step(state, idle), idle);
  if (state.values[3].value() == 0) {
    return std::nullopt;
  }
  return CantorStep{state.values[0].value() == 1 ? 1 : 0,
                    state.values[2].value()};
}

}  // namespace arnn
