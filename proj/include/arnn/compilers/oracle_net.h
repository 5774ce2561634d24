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
#include <string_view>

#include "arnn/codec/alphabet.h"
#include "arnn/core/network.h"
#include "arnn/numerics/activation.h"
#include "arnn/numerics/exact_scalar.h"

namespace arnn {

struct OracleNetSpec {
  // Cantor-4 oracle real: an Oracle scalar with Cantor-4 packing or a base-4
  // Stream with digits in {1,3}. Its k-th packed bit answers the string of
  // index k.
  ExactScalar oracle;
  Alphabet alphabet;
  enum class Realization {
    kMonolithic,  // one stack program holding index and oracle stacks
    kComposed,    // indexer net composed with an extractor net
  } realization = Realization::kMonolithic;
};

// Decides the membership coded by the oracle. The index of the input word
// is kept as a unary stack in rational neurons and rebuilt per symbol
// (index <- k * index + rank + 1 in bijective base k); the oracle weight is
// loaded into a stack neuron and popped index times. A query beyond the
// oracle's horizon pops an empty stack: the net rejects with the flag line
// raised. ConstructionError for a non-Cantor oracle.
Network oracle_net(const OracleNetSpec& spec);

// Stream-mode stack program: after the input ends, out_data pulses once per
// unit of the word's index, with out_valid raised over the pulse train.
Network indexer_net(const Alphabet& alphabet);

// One data line. Pops one bit of the Cantor-4 oracle per input pulse
// (pulses at least two ticks apart); when the input validation falls it
// reports the last popped bit, with the flag raised if a pop found the
// stack empty.
Network oracle_extractor_net(const ExactScalar& oracle);

// Ticks sufficient for either realization to answer on `word`.
std::size_t oracle_net_budget(std::string_view word, const Alphabet& alphabet);

// Runs the net on `word`: the oracle bit, HorizonExceeded when the net
// raised the flag, Timeout when it did not answer within the budget.
int consult_oracle(const Network& net, std::string_view word,
                   std::size_t budget,
                   const PrecisionBudget& precision = PrecisionBudget());

}  // namespace arnn
