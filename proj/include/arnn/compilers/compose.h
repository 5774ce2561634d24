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
#include <vector>

#include "arnn/core/network.h"

namespace arnn {

// data_lines[j] names the output data line of the first net that drives
// data line j of the second. The nets built here have one output data line
// (index 0).
struct Handoff {
  std::vector<std::size_t> data_lines;
};

// Disjoint union of neurons. The second net's input weights become state
// weights from the first net's output neurons (data lines from out_data,
// the validation line from out_valid). The combined net reads the first
// net's inputs and alphabet and reports the second net's outputs.
// ShapeError when the handoff does not match the line counts.
Network compose_nets(const Network& first, const Network& second,
                     const Handoff& handoff);

// Handoff of first's single data line onto each data line of second.
Handoff single_line_handoff(std::size_t second_inputs = 1);

// Two Signal neurons copying data line 0 and the validation line; alphabet
// "1".
Network identity_net();

}  // namespace arnn
