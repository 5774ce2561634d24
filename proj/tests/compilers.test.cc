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

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arnn/codec/alphabet.h"
#include "arnn/codec/cantor.h"
#include "arnn/codec/language.h"
#include "arnn/codec/oracle_table.h"
#include "arnn/compilers/compose.h"
#include "arnn/compilers/dfa.h"
#include "arnn/compilers/gadgets.h"
#include "arnn/compilers/oracle_net.h"
#include "arnn/compilers/two_stack.h"
#include "arnn/core/dynamics.h"
#include "arnn/error.h"

namespace arnn {
namespace {

std::vector<std::string> words_up_to(const Alphabet& alphabet,
                                     std::size_t length) {
  std::vector<std::string> words;
  for (std::size_t i = 1;; ++i) {
    std::string w = string_of_index(i, alphabet);
    if (w.size() > length) break;
    words.push_back(w);
  }
  return words;
}

Dfa parity_dfa() {
  std::istringstream in(
      "alphabet ab\n"
      "state even accept start\nstate odd\n"
      "trans even a even\ntrans even b odd\n"
      "trans odd a odd\ntrans odd b even\n");
  return Dfa::parse(in);
}

Dfa random_dfa(std::mt19937& rng, std::size_t states) {
  std::uniform_int_distribution<std::size_t> pick(0, states - 1);
  std::vector<std::string> names;
  for (std::size_t q = 0; q < states; ++q) names.push_back("q" + std::to_string(q));
  std::set<std::size_t> accepting;
  for (std::size_t q = 0; q < states; ++q) {
    if (rng() % 2) accepting.insert(q);
  }
  std::vector<std::size_t> table;
  for (std::size_t i = 0; i < states * 2; ++i) table.push_back(pick(rng));
  return Dfa(Alphabet("ab"), names, pick(rng), accepting, table);
}

bool all_integer(const Network& net) {
  for (const ExactScalar* x : net.scalars()) {
    if (x->kind() != ExactScalar::Kind::kInteger) return false;
  }
  return true;
}

TEST(dfa, parse_and_direct_simulation) {
  Dfa dfa = parity_dfa();
  EXPECT_EQ(dfa.states(), 2u);
  EXPECT_TRUE(dfa.accepts(""));
  EXPECT_TRUE(dfa.accepts("abab"));
  EXPECT_FALSE(dfa.accepts("b"));
}

TEST(dfa, partial_table_is_rejected) {
  std::istringstream in("state s start\ntrans s a s\nalphabet ab\n");
  try {
    Dfa::parse(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConstructionError);
  }
}

TEST(dfa_to_net, weights_are_integers_and_signal) {
  Network net = dfa_to_net(parity_dfa());
  EXPECT_TRUE(all_integer(net));
  for (std::size_t i = 0; i < net.neurons(); ++i) {
    EXPECT_EQ(net.activation(i), Activation::kSignal);
  }
}

TEST(dfa_to_net, parity_examples) {
  Network net = dfa_to_net(parity_dfa());
  EXPECT_EQ(run(net, "bb", 16).verdict, Verdict::kAccept);
  EXPECT_EQ(run(net, "b", 16).verdict, Verdict::kReject);
  EXPECT_EQ(run(net, "", 16).verdict, Verdict::kAccept);
}

TEST(dfa_to_net, parity_all_words_up_to_four) {
  Dfa dfa = parity_dfa();
  Network net = dfa_to_net(dfa);
  std::vector<std::string> words = words_up_to(dfa.alphabet(), 4);
  ASSERT_EQ(words.size(), 31u);
  for (const auto& w : words) {
    RunResult r = run(net, w, 4 * (w.size() + 2));
    EXPECT_EQ(r.verdict, dfa.accepts(w) ? Verdict::kAccept : Verdict::kReject)
        << w;
    EXPECT_EQ(r.trace.ticks.size(), dfa_verdict_tick(w.size())) << w;
  }
}

TEST(dfa_to_net, accept_all) {
  Dfa dfa(Alphabet("ab"), {"s"}, 0, {0}, {0, 0});
  EXPECT_EQ(run(dfa_to_net(dfa), "ab", 16).verdict, Verdict::kAccept);
}

TEST(dfa_to_net, random_automata_up_to_length_eight) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    Dfa dfa = random_dfa(rng, 1 + trial);
    Network net = dfa_to_net(dfa);
    Simulator sim(net);
    for (const auto& w : words_up_to(dfa.alphabet(), 8)) {
      EXPECT_EQ(run(sim, w, 4 * (w.size() + 2)).verdict,
                dfa.accepts(w) ? Verdict::kAccept : Verdict::kReject)
          << "trial " << trial << " word " << w;
    }
  }
}

TEST(dfa_to_net, three_letter_alphabet) {
  // Accepts words whose last symbol is c.
  Dfa dfa(Alphabet("abc"), {"other", "c"}, 0, {1}, {0, 0, 1, 0, 0, 1});
  Network net = dfa_to_net(dfa);
  for (const auto& w : words_up_to(dfa.alphabet(), 4)) {
    EXPECT_EQ(run(net, w, 4 * (w.size() + 2)).verdict,
              dfa.accepts(w) ? Verdict::kAccept : Verdict::kReject)
        << w;
  }
}

TEST(two_stack, anbn_direct_simulation) {
  TwoStackMachine m = anbn_machine();
  EXPECT_EQ(m.simulate("", 100).verdict, Verdict::kAccept);
  EXPECT_EQ(m.simulate("ab", 100).verdict, Verdict::kAccept);
  EXPECT_EQ(m.simulate("aabb", 100).verdict, Verdict::kAccept);
  EXPECT_EQ(m.simulate("aab", 100).verdict, Verdict::kReject);
  EXPECT_EQ(m.simulate("ba", 100).verdict, Verdict::kReject);
  EXPECT_EQ(m.simulate("abab", 100).verdict, Verdict::kReject);
  EXPECT_EQ(m.simulate("aabb", 100).steps, 6u);
}

TEST(two_stack, parse_matches_builtin) {
  std::istringstream in(
      "alphabet ab\nstate q0 start\nstate acc accept\n"
      "rule q0 - - - -> A 0 -\nrule A a - - -> A 1 -\n"
      "rule A b 1 - -> B - -\nrule A $ 0 - -> acc - -\n"
      "rule B b 1 - -> B - -\nrule B $ 0 - -> acc - -\n");
  TwoStackMachine m = TwoStackMachine::parse(in);
  TwoStackMachine builtin = anbn_machine();
  for (const auto& w : words_up_to(m.alphabet(), 6)) {
    EXPECT_EQ(m.simulate(w, 100).verdict, builtin.simulate(w, 100).verdict);
  }
}

TEST(two_stack, nondeterminism_is_rejected) {
  std::istringstream in(
      "alphabet ab\nstate q start\n"
      "rule q a - - -> q 1 -\nrule q - 1 - -> q - -\n");
  TwoStackMachine m = TwoStackMachine::parse(in);
  try {
    two_stack_to_net(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConstructionError);
  }
}

TEST(two_stack, disjoint_tests_are_deterministic) {
  std::istringstream in(
      "alphabet ab\nstate q start\n"
      "rule q a 0 - -> q - -\nrule q a 1 - -> q - -\nrule q a e - -> q - -\n");
  EXPECT_NO_THROW(two_stack_to_net(TwoStackMachine::parse(in)));
}

TEST(two_stack_to_net, weights_are_rational) {
  Network net = two_stack_to_net(anbn_machine());
  bool any_fraction = false;
  for (const ExactScalar* x : net.scalars()) {
    ASSERT_FALSE(x->is_lazy());
    any_fraction = any_fraction || x->kind() == ExactScalar::Kind::kRational;
  }
  EXPECT_TRUE(any_fraction);
}

TEST(two_stack_to_net, anbn_examples) {
  TwoStackMachine m = anbn_machine();
  Network net = two_stack_to_net(m);
  EXPECT_EQ(run(net, "aabb", 200).verdict, Verdict::kAccept);
  EXPECT_EQ(run(net, "aab", 200).verdict, Verdict::kReject);
  EXPECT_EQ(run(net, "", 200).verdict, Verdict::kAccept);
}

TEST(two_stack_to_net, matches_machine_with_exact_tick_count) {
  TwoStackMachine m = anbn_machine();
  Network net = two_stack_to_net(m);
  Simulator sim(net);
  for (const auto& w : words_up_to(m.alphabet(), 7)) {
    auto outcome = m.simulate(w, 10000);
    std::size_t tick = two_stack_budget(w.size(), outcome.steps);
    RunResult r = run(sim, w, tick);
    EXPECT_EQ(r.verdict, outcome.verdict) << w;
    EXPECT_EQ(r.trace.ticks.size(), tick) << w;
  }
}

TEST(two_stack_to_net, divergence_is_timeout) {
  std::istringstream in(
      "alphabet a\nstate q start accept\nrule q - - - -> q 1 -\n");
  TwoStackMachine m = TwoStackMachine::parse(in);
  EXPECT_EQ(m.simulate("a", 50).verdict, Verdict::kTimeout);
  EXPECT_EQ(run(two_stack_to_net(m), "a", 300).verdict, Verdict::kTimeout);
}

TEST(two_stack_to_net, second_stack_and_empty_test) {
  // Copies the input onto stack 2 as bits (a=0, b=1), then pops it back,
  // accepting iff the last symbol was b. Exercises 'e' and both stacks.
  std::istringstream in(
      "alphabet ab\nstate q start\nstate back\nstate yes accept\nstate no\n"
      "rule q a - - -> q - 0\nrule q b - - -> q - 1\n"
      "rule q $ - - -> back - -\n"
      "rule back - - 1 -> yes - -\nrule back - - 0 -> no - -\n"
      "rule back - - e -> no - -\n");
  TwoStackMachine m = TwoStackMachine::parse(in);
  Network net = two_stack_to_net(m);
  for (const auto& w : words_up_to(m.alphabet(), 5)) {
    auto outcome = m.simulate(w, 1000);
    EXPECT_EQ(outcome.verdict,
              !w.empty() && w.back() == 'b' ? Verdict::kAccept
                                            : Verdict::kReject);
    EXPECT_EQ(run(net, w, two_stack_budget(w.size(), outcome.steps)).verdict,
              outcome.verdict)
        << w;
  }
}

TEST(gadgets, push_one_onto_empty_stack) {
  Network net = push_gadget();
  NetworkState s = step(net, NetworkState::zero(1), InputFrame{{1}, 1});
  EXPECT_EQ(s.values[0].value(), Rational(3, 4));
  EXPECT_EQ(run_push_gadget({1}), cantor_encode(std::vector<int>{1}));
}

TEST(gadgets, pop_one_example) {
  Network net = pop_one_gadget();
  NetworkState s{{ExactValue(Rational(13, 16))}};
  EXPECT_EQ(step(net, s, InputFrame{{}, 0}).values[0].value(), Rational(1, 4));
}

TEST(gadgets, push_pop_roundtrip_exhaustive) {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      std::vector<int> bits;
      for (std::size_t i = 0; i < len; ++i) bits.push_back((mask >> i) & 1);
      Rational x = run_push_gadget(bits);
      ASSERT_EQ(x, cantor_encode(bits));
      std::vector<int> popped;
      while (auto step = run_pop_gadget(x)) {
        auto reference = cantor_decode_step(x);
        ASSERT_TRUE(reference);
        ASSERT_EQ(step->bit, reference->bit);
        ASSERT_EQ(step->remainder, reference->remainder);
        popped.push_back(step->bit);
        x = step->remainder;
      }
      ASSERT_EQ(popped, bits);
    }
  }
}

TEST(compose, identity_pair_passes_the_bit) {
  Network net = compose_nets(identity_net(), identity_net(),
                             single_line_handoff());
  EXPECT_EQ(net.neurons(), 4u);
  RunResult r = run(net, "1", 4);
  EXPECT_EQ(r.verdict, Verdict::kAccept);
  EXPECT_EQ(r.trace.ticks.size(), 2u);

  NetworkState s = NetworkState::zero(4);
  s = step(net, s, InputFrame{{0}, 1});
  s = step(net, s, InputFrame{{0}, 0});
  EXPECT_EQ(output_bit(s.values[net.out_valid()], 0), 1);
  EXPECT_EQ(output_bit(s.values[net.out_data()], 0), 0);
}

TEST(compose, mismatched_lines) {
  Network two_lines(1, 2);
  try {
    compose_nets(identity_net(), two_lines, single_line_handoff(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeError);
  }
  try {
    compose_nets(identity_net(), identity_net(), Handoff{{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeError);
  }
}

ExactScalar cantor_oracle(const std::string& bits,
                          std::optional<DegreeLabel> label = {}) {
  auto table = std::make_shared<const OracleTable>(
      OracleTable::from_bit_string(bits));
  return ExactScalar::oracle(table, Packing::kCantor4, label);
}

const char* const kPaperBits = "0100100000100000000000100";

TEST(indexer_net, pulses_count_the_index) {
  Alphabet ab("ab");
  Network net = indexer_net(ab);
  for (const auto& w : words_up_to(ab, 3)) {
    std::size_t pulses = 0;
    bool seen_valid = false;
    Simulator sim(net);
    NetworkState s = NetworkState::zero(net.neurons());
    for (std::size_t t = 0; t < oracle_net_budget(w, ab); ++t) {
      InputFrame f{{0, 0}, 0};
      if (t < w.size()) {
        f.data[ab.rank(w[t])] = 1;
        f.validation = 1;
      }
      s = sim.step(s, f);
      int valid = output_bit(s.values[net.out_valid()], 0);
      int data = output_bit(s.values[net.out_data()], 0);
      if (data) {
        EXPECT_EQ(valid, 1);
        ++pulses;
      }
      seen_valid = seen_valid || valid;
      if (seen_valid && !valid) break;
    }
    EXPECT_EQ(pulses, index_of_string(w, ab)) << w;
  }
}

TEST(oracle_net, paper_language_examples) {
  OracleNetSpec spec{cantor_oracle(kPaperBits), Alphabet("ab")};
  Network net = oracle_net(spec);
  Alphabet ab("ab");
  EXPECT_EQ(consult_oracle(net, "ab", oracle_net_budget("ab", ab)), 1);
  EXPECT_EQ(consult_oracle(net, "b", oracle_net_budget("b", ab)), 0);
}

TEST(oracle_net, all_zero_oracle_rejects) {
  OracleNetSpec spec{cantor_oracle("00000000"), Alphabet("ab")};
  Network net = oracle_net(spec);
  for (const auto& w : words_up_to(spec.alphabet, 2)) {
    EXPECT_EQ(consult_oracle(net, w, oracle_net_budget(w, spec.alphabet)), 0);
  }
}

TEST(oracle_net, beyond_horizon_flags) {
  OracleNetSpec spec{cantor_oracle("0110"), Alphabet("ab")};
  Network net = oracle_net(spec);
  // "ab" has index 5, one past the horizon.
  RunResult r = run(net, "ab", oracle_net_budget("ab", spec.alphabet));
  EXPECT_EQ(r.verdict, Verdict::kReject);
  EXPECT_TRUE(r.flagged);
  try {
    consult_oracle(net, "ab", oracle_net_budget("ab", spec.alphabet));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHorizonExceeded);
  }
}

TEST(oracle_net, binary_packing_is_rejected) {
  auto table = std::make_shared<const OracleTable>(
      OracleTable::from_bit_string("0101"));
  OracleNetSpec spec{ExactScalar::oracle(table, Packing::kBinary),
                     Alphabet("ab")};
  try {
    oracle_net(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConstructionError);
  }
}

TEST(oracle_net, only_the_oracle_is_not_rational) {
  ExactScalar o = cantor_oracle(kPaperBits, DegreeLabel::jump());
  Network net = oracle_net(OracleNetSpec{o, Alphabet("ab")});
  std::size_t lazy = 0;
  for (const ExactScalar* x : net.scalars()) {
    if (x->is_lazy()) {
      ++lazy;
      EXPECT_EQ(x->label(), DegreeLabel::jump());
    }
  }
  EXPECT_EQ(lazy, 1u);
}

TEST(oracle_net, random_languages_match_decode_membership) {
  std::mt19937 rng(11);
  Alphabet ab("ab");
  for (int trial = 0; trial < 3; ++trial) {
    std::string bits;
    for (int i = 0; i < 15; ++i) bits.push_back(rng() % 2 ? '1' : '0');
    ExactScalar o = cantor_oracle(bits);
    UnitReal code = UnitReal::from_digit_string(2, bits);
    Network mono = oracle_net(OracleNetSpec{o, ab});
    Network composed = oracle_net(
        OracleNetSpec{o, ab, OracleNetSpec::Realization::kComposed});
    for (std::size_t i = 1; i <= bits.size(); ++i) {
      std::string w = string_of_index(i, ab);
      int expected = decode_membership(code, w, ab);
      EXPECT_EQ(consult_oracle(mono, w, oracle_net_budget(w, ab)), expected)
          << bits << " " << w;
      EXPECT_EQ(consult_oracle(composed, w, oracle_net_budget(w, ab)),
                expected)
          << bits << " " << w;
    }
  }
}

TEST(oracle_net, composed_matches_monolithic_on_random_strings) {
  std::mt19937 rng(5);
  Alphabet ab("ab");
  ExactScalar o = cantor_oracle(kPaperBits);
  Network mono = oracle_net(OracleNetSpec{o, ab});
  Network composed =
      oracle_net(OracleNetSpec{o, ab, OracleNetSpec::Realization::kComposed});
  for (int i = 0; i < 10; ++i) {
    std::string w;
    std::size_t len = rng() % 6;
    for (std::size_t j = 0; j < len; ++j) w.push_back(rng() % 2 ? 'b' : 'a');
    std::size_t budget = oracle_net_budget(w, ab);
    RunResult x = run(mono, w, budget);
    RunResult y = run(composed, w, budget);
    EXPECT_NE(x.verdict, Verdict::kTimeout) << w;
    EXPECT_EQ(x.verdict, y.verdict) << w;
    EXPECT_EQ(x.flagged, y.flagged) << w;
  }
}

TEST(oracle_net, stream_oracle) {
  // Cantor digits of the paper bits as a lazy base-4 stream.
  std::string bits = kPaperBits;
  UnitReal digits = UnitReal::from_index_function(
      4, [bits](std::size_t n) { return 2 * (bits[n - 1] - '0') + 1; },
      bits.size());
  ExactScalar o = ExactScalar::stream(digits, DegreeLabel::jump());
  Alphabet ab("ab");
  Network net = oracle_net(OracleNetSpec{o, ab});
  EXPECT_EQ(consult_oracle(net, "ab", oracle_net_budget("ab", ab)), 1);
  EXPECT_EQ(consult_oracle(net, "a", oracle_net_budget("a", ab)), 1);
  EXPECT_EQ(consult_oracle(net, "b", oracle_net_budget("b", ab)), 0);
}

}  // namespace
}  // namespace arnn
