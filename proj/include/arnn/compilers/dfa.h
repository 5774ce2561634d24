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
#include <string_view>
#include <vector>

#include "arnn/codec/alphabet.h"
#include "arnn/core/network.h"

namespace arnn {

// Deterministic finite automaton with a total transition table.
class Dfa {
 public:
  // transitions[q * |alphabet| + rank] is the successor of q on that
  // symbol. ConstructionError on a partial table or out-of-range state.
  Dfa(Alphabet alphabet, std::vector<std::string> states, std::size_t start,
      std::set<std::size_t> accepting, std::vector<std::size_t> transitions);

  // Lines `state <name> [accept] [start]`, `trans <from> <symbol> <to>` and
  // an optional `alphabet <symbols>`; without it the alphabet is the sorted
  // set of transition symbols.
  static Dfa parse(std::istream& in);
  static Dfa load(const std::string& path);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t states() const { return names_.size(); }
  const std::string& name(std::size_t q) const { return names_.at(q); }
  std::size_t start() const { return start_; }
  bool accepting(std::size_t q) const { return accepting_.count(q) > 0; }
  std::size_t next(std::size_t q, char symbol) const;

  bool accepts(std::string_view word) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::size_t start_;
  std::set<std::size_t> accepting_;
  std::vector<std::size_t> transitions_;
};

// All weights Integer, all activations Signal. Besides one neuron per state
// and one per (state, symbol) pair the net has a clock neuron, an
// end-of-input detector and the two output neurons. The verdict appears at
// tick max(|w|, 1) + 2.
Network dfa_to_net(const Dfa& dfa);

std::size_t dfa_verdict_tick(std::size_t word_length);

}  // namespace arnn
