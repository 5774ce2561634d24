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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "arnn/codec/oracle_table.h"
#include "arnn/compilers/dfa.h"
#include "arnn/core/dynamics.h"
#include "arnn/core/network.h"
#include "arnn/core/network_io.h"
#include "arnn/error.h"

namespace arnn {
namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

InputFrame idle(std::size_t inputs) {
  return InputFrame{std::vector<int>(inputs, 0), 0};
}

Network random_net(std::mt19937& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  auto scalar = [&]() -> ExactScalar {
    if (rng() % 3 == 0) return 0;
    return ExactScalar::rational(make_rational(num(rng), den(rng)));
  };
  Network net(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) net.set_state_weight(i, j, scalar());
    for (std::size_t c = 0; c <= m; ++c) net.set_input_weight(i, c, scalar());
    net.set_bias(i, scalar());
    if (rng() % 4 == 0) net.set_activation(i, Activation::kSignal);
  }
  return net;
}

Network parity_net() {
  std::istringstream in(
      "alphabet ab\nstate even accept start\nstate odd\n"
      "trans even a even\ntrans even b odd\n"
      "trans odd a odd\ntrans odd b even\n");
  return dfa_to_net(Dfa::parse(in));
}

TEST(network, shape_checks) {
  EXPECT_EQ(code_of([] { Network(0, 1); }), ErrorCode::kShapeError);
  Network net(2, 1);
  EXPECT_EQ(code_of([&] { net.set_state_weight(2, 0, 1); }),
            ErrorCode::kShapeError);
  EXPECT_EQ(code_of([&] { net.set_input_weight(0, 2, 1); }),
            ErrorCode::kShapeError);
  EXPECT_EQ(code_of([&] { net.set_outputs(0, 5); }), ErrorCode::kShapeError);
  EXPECT_EQ(code_of([&] { net.set_alphabet(Alphabet("ab")); }),
            ErrorCode::kShapeError);
  EXPECT_EQ(net.scalars().size(), 2u * 2 + 2u * 2 + 2u);
}

TEST(step, examples) {
  Network bias_only(1, 0);
  bias_only.set_bias(0, ExactScalar::rational(Rational(1, 2)));
  NetworkState s{{ExactValue(Rational(1, 3))}};
  EXPECT_EQ(step(bias_only, s, idle(0)).values[0], ExactValue(Rational(1, 2)));

  Network doubling(1, 0);
  doubling.set_state_weight(0, 0, 2);
  NetworkState x{{ExactValue(Rational(3, 4))}};
  EXPECT_EQ(step(doubling, x, idle(0)).values[0], ExactValue(Rational(1)));

  Network pop(1, 0);
  pop.set_state_weight(0, 0, 4);
  pop.set_bias(0, -3);
  NetworkState y{{ExactValue(Rational(13, 16))}};
  EXPECT_EQ(step(pop, y, idle(0)).values[0], ExactValue(Rational(1, 4)));
}

TEST(step, shape_errors) {
  Network net(2, 1);
  EXPECT_EQ(code_of([&] { step(net, NetworkState::zero(3), idle(1)); }),
            ErrorCode::kShapeError);
  EXPECT_EQ(code_of([&] { step(net, NetworkState::zero(2), idle(2)); }),
            ErrorCode::kShapeError);
}

TEST(step, unknown_sign_names_the_neuron) {
  Network net(2, 0);
  // Neuron 1 thresholds 1/3 - 1/3 known only through a stream.
  net.set_activation(1, Activation::kSignal);
  net.set_state_weight(1, 0, ExactScalar::stream(
                                 UnitReal::from_rational(Rational(1, 3))));
  net.set_bias(0, 1);
  net.set_bias(1, ExactScalar::rational(Rational(-1, 3)));
  NetworkState s = step(net, NetworkState::zero(2), idle(0));
  try {
    step(net, s, idle(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownSign);
    EXPECT_EQ(e.neuron(), 1u);
  }
}

TEST(step, lazy_weights_decide_when_separated) {
  Network net(2, 0);
  net.set_activation(1, Activation::kSignal);
  net.set_state_weight(1, 0, ExactScalar::stream(
                                 UnitReal::from_rational(Rational(1, 3))));
  net.set_bias(0, 1);
  net.set_bias(1, ExactScalar::rational(Rational(-1, 4)));
  NetworkState s = step(net, step(net, NetworkState::zero(2), idle(0)), idle(0));
  EXPECT_EQ(s.values[1], ExactValue(Rational(1)));
}

TEST(step, confinement_synchrony_and_exactness) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::size_t m = rng() % 3;
    Network net = random_net(rng, n, m);
    Simulator sim(net);
    NetworkState s = NetworkState::zero(n);
    for (int t = 0; t < 20; ++t) {
      InputFrame f = idle(m);
      for (int& u : f.data) u = rng() % 2;
      f.validation = rng() % 2;
      NetworkState next = sim.step(s, f);
      // Any evaluation order gives the same state.
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      NetworkState shuffled = NetworkState::zero(n);
      for (std::size_t i : order) shuffled.values[i] = sim.evaluate(i, s, f);
      ASSERT_EQ(next, shuffled);
      for (const auto& v : next.values) {
        ASSERT_TRUE(v.is_point());
        ASSERT_GE(v.value(), 0);
        ASSERT_LE(v.value(), 1);
      }
      s = next;
    }
  }
}

TEST(run, parity_examples) {
  Network net = parity_net();
  EXPECT_EQ(run(net, "bb", 16).verdict, Verdict::kAccept);
  EXPECT_EQ(run(net, "b", 16).verdict, Verdict::kReject);
  EXPECT_EQ(run(net, "", 16).verdict, Verdict::kAccept);
}

TEST(run, trace_protocol) {
  Network net = parity_net();
  RunResult r = run(net, "ab", 16);
  ASSERT_EQ(r.trace.ticks.size(), 4u);
  EXPECT_EQ(r.trace.ticks[0].data, (std::vector<int>{1, 0}));
  EXPECT_EQ(r.trace.ticks[1].data, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.trace.ticks[0].validation, 1);
  EXPECT_EQ(r.trace.ticks[1].validation, 1);
  EXPECT_EQ(r.trace.ticks[2].validation, 0);
  EXPECT_EQ(r.trace.ticks[3].out_valid, 1);
  EXPECT_EQ(r.trace.ticks[2].out_valid, 0);
  EXPECT_EQ(run(net, "ab", 16).trace, r.trace);
  EXPECT_EQ(format_trace(r.trace), format_trace(run(net, "ab", 16).trace));
}

TEST(run, budget_errors_and_timeout) {
  Network net = parity_net();
  EXPECT_EQ(code_of([&] { run(net, "ab", 2); }), ErrorCode::kConfigError);
  EXPECT_EQ(run(net, "ab", 3).verdict, Verdict::kTimeout);
  EXPECT_EQ(code_of([&] { run(net, "ac", 10); }), ErrorCode::kAlphabetError);
  Network bare(1, 1);
  EXPECT_EQ(code_of([&] { run(bare, "", 10); }), ErrorCode::kConfigError);
}

TEST(recognizes, examples) {
  Network net = parity_net();
  std::vector<std::pair<std::string, int>> sample;
  for (std::size_t i = 1; i <= 31; ++i) {
    std::string w = string_of_index(i, Alphabet("ab"));
    if (w.size() > 4) break;
    sample.emplace_back(w, std::count(w.begin(), w.end(), 'b') % 2 == 0);
  }
  RecognitionReport report = recognizes(net, sample, 24);
  EXPECT_EQ(report.total, 31u);
  EXPECT_EQ(report.agree, 31u);
  EXPECT_EQ(report.timeouts, 0u);

  RecognitionReport none = recognizes(net, {{"a", 1}, {"ab", 0}}, 0);
  EXPECT_EQ(none.timeouts, 2u);
  EXPECT_EQ(none.agree, 0u);
}

TEST(network_io, roundtrip) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Network net = random_net(rng, 1 + rng() % 5, 2);
    net.set_alphabet(Alphabet("xy"));
    net.set_outputs(0, net.neurons() - 1);
    std::string text = serialize_network(net);
    std::istringstream in(text);
    Network back = parse_network(in);
    EXPECT_EQ(serialize_network(back), text);
    for (const ExactScalar* x : back.scalars()) EXPECT_FALSE(x->is_lazy());
  }
}

TEST(network_io, oracle_scalars_and_errors) {
  auto dir = std::filesystem::temp_directory_path() / "arnn_core_io";
  std::filesystem::create_directories(dir);
  {
    std::ofstream t(dir / "o.oracle");
    t << OracleTable::from_bit_string("0110").serialize();
  }
  std::istringstream in(
      "neurons 2 inputs 1\n"
      "a 0 1 oracle:o.oracle:cantor4:0'\n"
      "a 1 1 oracle:o.oracle:cantor4:0'\n"
      "b 0 1 int:1\nc 1 rat:-1/2\nactivation 1 sig\nout_data 1\nout_valid 0\n");
  Network net = parse_network(in, dir.string());
  const ExactScalar& w = net.state_weight(0, 1);
  EXPECT_EQ(w.kind(), ExactScalar::Kind::kOracle);
  EXPECT_EQ(w.label(), DegreeLabel::jump());
  EXPECT_EQ(w.as_oracle().table, net.state_weight(1, 1).as_oracle().table);
  EXPECT_EQ(net.activation(1), Activation::kSignal);
  EXPECT_EQ(code_of([&] { serialize_network(net); }), ErrorCode::kConfigError);
  std::string text = serialize_network(
      net, {{w.as_oracle().table.get(), "o.oracle"}});
  EXPECT_NE(text.find("oracle:o.oracle:cantor4:0'"), std::string::npos);

  std::istringstream bad("neurons 2 inputs 1\na 0 5 int:1\n");
  EXPECT_EQ(code_of([&] { parse_network(bad); }), ErrorCode::kShapeError);
  std::istringstream junk("neurons 2 inputs 1\nz 0\n");
  EXPECT_EQ(code_of([&] { parse_network(junk); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_scalar("float:1.5"); }), ErrorCode::kParseError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace arnn
