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

#include "arnn/compilers/dfa.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include "arnn/error.h"
#include "arnn/util/text.h"
#include "compilers/net_builder.h"

namespace arnn {

Dfa::Dfa(Alphabet alphabet, std::vector<std::string> states,
         std::size_t start, std::set<std::size_t> accepting,
         std::vector<std::size_t> transitions)
    : alphabet_(std::move(alphabet)),
      names_(std::move(states)),
      start_(start),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
  if (names_.empty() || start_ >= names_.size()) {
    fail(ErrorCode::kConstructionError, "DFA start state out of range");
  }
  for (std::size_t q : accepting_) {
    if (q >= names_.size()) {
      fail(ErrorCode::kConstructionError, "DFA accepting state out of range");
    }
  }
  if (transitions_.size() != names_.size() * alphabet_.size()) {
    fail(ErrorCode::kConstructionError, "DFA transition table is not total");
  }
  for (std::size_t q : transitions_) {
    if (q >= names_.size()) {
      fail(ErrorCode::kConstructionError, "DFA transition to unknown state");
    }
  }
}

Dfa Dfa::parse(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::vector<std::string> names;
  std::map<std::string, std::size_t> ids;
  std::optional<std::size_t> start;
  std::set<std::size_t> accepting;
  struct Trans {
    std::string from;
    char symbol;
    std::string to;
    std::size_t line;
  };
  std::vector<Trans> trans;
  for (const auto& record : read_records(in)) {
    const auto& f = record.fields;
    const std::string where = "line " + std::to_string(record.number) + ": ";
    if (f[0] == "alphabet" && f.size() == 2) {
      alphabet.emplace(f[1]);
    } else if (f[0] == "state" && f.size() >= 2 && f.size() <= 4) {
      if (ids.count(f[1])) fail(ErrorCode::kParseError, where + "duplicate state");
      std::size_t q = names.size();
      ids[f[1]] = q;
      names.push_back(f[1]);
      for (std::size_t i = 2; i < f.size(); ++i) {
        if (f[i] == "accept") {
          accepting.insert(q);
        } else if (f[i] == "start" && !start) {
          start = q;
        } else {
          fail(ErrorCode::kParseError, where + "bad state attribute " + f[i]);
        }
      }
    } else if (f[0] == "trans" && f.size() == 4 && f[2].size() == 1) {
      trans.push_back({f[1], f[2][0], f[3], record.number});
    } else {
      fail(ErrorCode::kParseError, where + "unrecognized DFA record");
    }
  }
  if (!start) fail(ErrorCode::kParseError, "DFA has no start state");
  if (!alphabet) {
    std::string symbols;
    for (const auto& t : trans) symbols.push_back(t.symbol);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    if (symbols.empty()) fail(ErrorCode::kParseError, "DFA has no alphabet");
    alphabet.emplace(symbols);
  }
  const std::size_t k = alphabet->size();
  std::vector<std::optional<std::size_t>> table(names.size() * k);
  for (const auto& t : trans) {
    const std::string where = "line " + std::to_string(t.line) + ": ";
    auto from = ids.find(t.from);
    auto to = ids.find(t.to);
    if (from == ids.end() || to == ids.end()) {
      fail(ErrorCode::kParseError, where + "transition names an unknown state");
    }
    auto& slot = table[from->second * k + alphabet->rank(t.symbol)];
    if (slot) fail(ErrorCode::kParseError, where + "duplicate transition");
    slot = to->second;
  }
  std::vector<std::size_t> transitions;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) {
      fail(ErrorCode::kConstructionError,
           "no transition from " + names[i / k] + " on " +
               std::string(1, alphabet->symbol(i % k)));
    }
    transitions.push_back(*table[i]);
  }
  return Dfa(*alphabet, std::move(names), *start, std::move(accepting),
             std::move(transitions));
}

Dfa Dfa::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open DFA file " + path);
  return parse(in);
}

std::size_t Dfa::next(std::size_t q, char symbol) const {
  return transitions_.at(q * alphabet_.size() + alphabet_.rank(symbol));
}

bool Dfa::accepts(std::string_view word) const {
  std::size_t q = start_;
  for (char c : word) q = next(q, c);
  return accepting(q);
}

std::size_t dfa_verdict_tick(std::size_t word_length) {
  return std::max<std::size_t>(word_length, 1) + 2;
}

// on(t) is 0 at t = 0 and 1 afterwards, so (1 - on) marks the first tick.
// g[q][a](t+1) = 1 iff the automaton is in q before reading symbol a at t.
// s[q] latches the current state: a transition into q sets it, any
// transition clears the others, and it holds once the input has ended.
Network dfa_to_net(const Dfa& dfa) {
  const Alphabet& alphabet = dfa.alphabet();
  const std::size_t k = alphabet.size();
  const std::size_t n = dfa.states();
  const auto sig = Activation::kSignal;

  NetBuilder b(k);
  const std::size_t on = b.add(sig);
  b.bias(on, 1);
  std::vector<std::size_t> state(n);
  for (std::size_t q = 0; q < n; ++q) state[q] = b.add(sig);
  std::vector<std::size_t> conj(n * k);
  for (std::size_t i = 0; i < n * k; ++i) conj[i] = b.add(sig);
  const std::size_t done = b.add(sig);
  const std::size_t out_valid = b.add(sig);
  const std::size_t out_data = b.add(sig);

  const std::size_t start = dfa.start();
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t g = conj[q * k + a];
      b.input(g, a, 1);
      b.bias(g, -1);
      if (q == start) {
        b.bias(g, 1);
        b.weight(g, on, -1);
      }
    }
    std::size_t s = state[q];
    b.weight(s, s, 1);
    b.validation(s, -1);
    if (q == start) {
      b.bias(s, 1);
      b.weight(s, on, -1);
      b.validation(s, -1);
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t g = conj[p * k + a];
      std::size_t q = dfa.next(p, alphabet.symbol(a));
      for (std::size_t c = 0; c < k; ++c) {
        b.weight(conj[q * k + c], g, 1);
      }
      for (std::size_t r = 0; r < n; ++r) {
        b.weight(state[r], g, r == q ? 3 : -1);
      }
    }
  }
  b.weight(done, on, 1);
  b.validation(done, -1);
  b.weight(out_valid, done, 1);
  for (std::size_t q = 0; q < n; ++q) {
    if (dfa.accepting(q)) b.weight(out_data, state[q], 1);
  }

  Network net = b.build();
  net.set_alphabet(alphabet);
  net.set_outputs(out_data, out_valid);
  return net;
}

}  // namespace arnn
