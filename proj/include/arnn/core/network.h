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
#include <optional>
#include <string>
#include <vector>

#include "arnn/codec/alphabet.h"
#include "arnn/numerics/exact_scalar.h"

namespace arnn {

enum class Activation {
  kSaturatedLinear,  // sigma: clamp to [0,1]
  kSignal,           // 0 for x <= 0, 1 otherwise
};

// An analog recurrent network: N neurons, M data input lines plus one
// validation line, and exact weights
//
//   x_i(t+1) = act_i( sum_j a_ij x_j(t) + sum_j b_ij u_j(t) + c_i ).
//
// Input columns are 0..M-1 for the data lines and M for the validation
// line. Neuron and line indices are 0-based. Omitted weights are zero.
class Network {
 public:
  Network(std::size_t neurons, std::size_t inputs);

  std::size_t neurons() const { return neurons_; }
  // Number of data lines M.
  std::size_t inputs() const { return inputs_; }
  std::size_t validation_column() const { return inputs_; }

  const ExactScalar& state_weight(std::size_t i, std::size_t j) const;
  void set_state_weight(std::size_t i, std::size_t j, ExactScalar w);
  // column in 0..M, M being the validation line.
  const ExactScalar& input_weight(std::size_t i, std::size_t column) const;
  void set_input_weight(std::size_t i, std::size_t column, ExactScalar w);
  const ExactScalar& bias(std::size_t i) const;
  void set_bias(std::size_t i, ExactScalar c);
  Activation activation(std::size_t i) const;
  void set_activation(std::size_t i, Activation act);

  std::size_t out_data() const { return out_data_; }
  std::size_t out_valid() const { return out_valid_; }
  // Raised together with out_valid when the net rejects because it ran out
  // of something it needed (an oracle horizon).
  const std::optional<std::size_t>& out_flag() const { return out_flag_; }
  void set_outputs(std::size_t data, std::size_t valid,
                   std::optional<std::size_t> flag = std::nullopt);

  // Symbols presented one-hot on the data lines; size must equal M.
  const std::optional<Alphabet>& alphabet() const { return alphabet_; }
  void set_alphabet(Alphabet alphabet);

  // Every weight, input weight and bias, row by row.
  std::vector<const ExactScalar*> scalars() const;

 private:
  void check_neuron(std::size_t i) const;

  std::size_t neurons_;
  std::size_t inputs_;
  std::vector<ExactScalar> state_weights_;  // N x N, row-major
  std::vector<ExactScalar> input_weights_;  // N x (M+1), row-major
  std::vector<ExactScalar> biases_;
  std::vector<Activation> activations_;
  std::size_t out_data_ = 0;
  std::size_t out_valid_ = 0;
  std::optional<std::size_t> out_flag_;
  std::optional<Alphabet> alphabet_;
};

}  // namespace arnn
