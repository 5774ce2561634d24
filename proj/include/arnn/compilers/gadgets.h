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

#include <optional>
#include <vector>

#include "arnn/codec/cantor.h"
#include "arnn/core/dynamics.h"
#include "arnn/core/network.h"
#include "arnn/numerics/rational.h"

namespace arnn {

// Single saturated neuron holding a Cantor-4 stack; every tick pushes the
// bit b on data line 0:
//   x(t+1) = sigma(x/4 + (2b+1)/4).
Network push_gadget();

// Neurons 0 (top bit), 1 (the stack, held), 2 (remainder) and 3
// (nonempty). Starting with the stack x in neuron 1 and zeros elsewhere,
// after two ticks
//   bit = signal(4x - 2),  remainder = sigma(4x - 2 bit - 1),
//   nonempty = signal(4x).
Network pop_gadget();

// One neuron with a = 4, c = -3: the remainder after popping a 1.
Network pop_one_gadget();

// Runs the push gadget from the empty stack so that bits[0] ends on top;
// the result is the stack cantor_encode(bits).
Rational run_push_gadget(const std::vector<int>& bits);

// Pops the top bit of x through the pop gadget; nullopt for the empty stack.
std::optional<CantorStep> run_pop_gadget(const Rational& x);

}  // namespace arnn
