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

#include "arnn/cli/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "arnn/codec/alphabet.h"
#include "arnn/codec/language.h"
#include "arnn/codec/oracle_table.h"
#include "arnn/compilers/dfa.h"
#include "arnn/compilers/oracle_net.h"
#include "arnn/compilers/two_stack.h"
#include "arnn/core/dynamics.h"
#include "arnn/core/network_io.h"
#include "arnn/degrees/degree_order.h"
#include "arnn/error.h"
#include "arnn/spike/spike_schedule.h"
#include "arnn/util/text.h"

namespace arnn {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string alphabet;
  std::optional<std::string> string;
  std::optional<std::size_t> index;
  std::string language;
  std::size_t digits = 0;
  std::optional<std::string> code;
  std::optional<std::string> table;
  std::string dfa;
  std::string machine;
  std::optional<std::string> output;
  std::string packing = "cantor4";
  std::optional<std::string> label;
  bool composed = false;
  std::string net;
  std::string word;
  std::size_t budget = 0;
  std::size_t precision = 64;
  bool trace = false;
  std::vector<std::string> timing;
  std::optional<std::string> lattice;
  std::optional<std::string> spike_language;
  std::size_t window = 0;
  std::string schedule;
};

// Writes to the output file when one was given, else to `out`.
void emit(const std::optional<std::string>& path, const std::string& text,
          std::ostream& out) {
  if (path) {
    write_file_atomically(*path, text);
  } else {
    out << text;
  }
}

// Digit strings on the command line are finite expansions.
UnitReal code_from_text(const std::string& digits) {
  for (char c : digits) {
    if (c != '0' && c != '1') {
      fail(ErrorCode::kParseError, "code must be a string of 0 and 1");
    }
  }
  return UnitReal::from_digit_string(2, digits);
}

void cmd_index(const Options& o, std::ostream& out) {
  Alphabet alphabet(o.alphabet);
  if (o.string.has_value() == o.index.has_value()) {
    fail(ErrorCode::kConfigError, "give exactly one of --string and --index");
  }
  if (o.string) {
    out << index_of_string(*o.string, alphabet) << "\n";
  } else {
    out << string_of_index(*o.index, alphabet) << "\n";
  }
}

void cmd_encode(const Options& o, std::ostream& out) {
  Language language = Language::load(o.language);
  UnitReal code = encode_language(language, o.digits);
  std::string digits = code.digit_string(o.digits);
  if (o.table) {
    write_file_atomically(*o.table,
                          OracleTable::from_bit_string(digits).serialize());
  }
  out << digits << "\n";
}

void cmd_decode(const Options& o, std::ostream& out) {
  Alphabet alphabet(o.alphabet);
  if (o.code.has_value() == o.table.has_value()) {
    fail(ErrorCode::kConfigError, "give exactly one of --code and --table");
  }
  if (!o.string) fail(ErrorCode::kConfigError, "--string is required");
  if (o.code) {
    out << decode_membership(code_from_text(*o.code), *o.string, alphabet)
        << "\n";
    return;
  }
  OracleTable table = OracleTable::load(*o.table);
  out << table.bit(index_of_string(*o.string, alphabet)) << "\n";
}

void cmd_compile_dfa(const Options& o, std::ostream& out) {
  emit(o.output, serialize_network(dfa_to_net(Dfa::load(o.dfa))), out);
}

void cmd_compile_two_stack(const Options& o, std::ostream& out) {
  TwoStackMachine machine = TwoStackMachine::load(o.machine);
  emit(o.output, serialize_network(two_stack_to_net(machine)), out);
}

void cmd_build_oracle_net(const Options& o, std::ostream& out) {
  auto table = std::make_shared<const OracleTable>(OracleTable::load(*o.table));
  std::optional<DegreeLabel> label;
  if (o.label) label.emplace(*o.label);
  OracleNetSpec spec{
      ExactScalar::oracle(table, parse_packing(o.packing), label),
      Alphabet(o.alphabet),
      o.composed ? OracleNetSpec::Realization::kComposed
                 : OracleNetSpec::Realization::kMonolithic};
  Network net = oracle_net(spec);
  // The net file names the table relative to where the net is written.
  fs::path base = o.output ? fs::absolute(*o.output).parent_path()
                           : fs::current_path();
  std::string reference =
      fs::proximate(fs::absolute(*o.table), base).generic_string();
  emit(o.output, serialize_network(net, {{table.get(), reference}}), out);
}

void cmd_run(const Options& o, std::ostream& out) {
  Network net = load_network(o.net);
  RunResult result = run(net, o.word, o.budget, PrecisionBudget(o.precision));
  if (o.trace) out << format_trace(result.trace);
  if (result.verdict == Verdict::kTimeout) {
    fail(ErrorCode::kTimeout, "no verdict within " + std::to_string(o.budget) +
                                  " ticks");
  }
  if (result.flagged) {
    fail(ErrorCode::kHorizonExceeded,
         "the net raised its flag line: the query lies beyond its oracle");
  }
  out << to_string(result.verdict) << "\n";
}

void cmd_classify(const Options& o, std::ostream& out) {
  Network net = load_network(o.net);
  DegreeOrder order =
      o.lattice ? DegreeOrder::load(*o.lattice) : DegreeOrder::builtin();
  std::set<DegreeLabel> timing;
  for (const auto& t : o.timing) timing.insert(DegreeLabel(t));
  out << to_string(classify_network(net, timing, order)) << "\n";
}

void cmd_spike_encode(const Options& o, std::ostream& out) {
  if (o.code.has_value() == o.spike_language.has_value()) {
    fail(ErrorCode::kConfigError, "give exactly one of --code and --language");
  }
  UnitReal r = o.code ? code_from_text(*o.code)
                      : encode_language(Language::load(*o.spike_language),
                                        o.window);
  if (o.label) r = r.with_label(DegreeLabel(*o.label));
  emit(o.output, timing_encode(r, o.window).serialize(), out);
}

void cmd_spike_decode(const Options& o, std::ostream& out) {
  SpikeSchedule s = SpikeSchedule::load(o.schedule);
  out << timing_decode(s).digit_string(s.window()) << "\n";
}

bool is_usage_error(ErrorCode code) {
  return code == ErrorCode::kParseError || code == ErrorCode::kConfigError;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app("Exact analog recurrent network workbench", "arnn");
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, void (*)(const Options&, std::ostream&)> handlers;

  auto* index = app.add_subcommand("index", "string <-> length-lex index");
  index->add_option("--alphabet", o.alphabet)->required();
  index->add_option("--string", o.string);
  index->add_option("--index", o.index)->check(CLI::PositiveNumber);
  handlers[index] = cmd_index;

  auto* encode = app.add_subcommand("encode", "first digits of r_L");
  encode->add_option("--language", o.language)->required();
  encode->add_option("--digits", o.digits)->required();
  encode->add_option("--table", o.table, "also write an oracle table");
  handlers[encode] = cmd_encode;

  auto* decode = app.add_subcommand("decode", "membership bit of a string");
  decode->add_option("--code", o.code);
  decode->add_option("--table", o.table);
  decode->add_option("--alphabet", o.alphabet)->required();
  decode->add_option("--string", o.string);
  handlers[decode] = cmd_decode;

  auto* dfa = app.add_subcommand("compile-dfa", "DFA -> integer net");
  dfa->add_option("--dfa", o.dfa)->required();
  dfa->add_option("--output", o.output);
  handlers[dfa] = cmd_compile_dfa;

  auto* two = app.add_subcommand("compile-two-stack",
                                 "two-stack machine -> rational net");
  two->add_option("--machine", o.machine)->required();
  two->add_option("--output", o.output);
  handlers[two] = cmd_compile_two_stack;

  auto* oracle = app.add_subcommand("build-oracle-net",
                                    "oracle table -> oracle-consulting net");
  oracle->add_option("--table", o.table)->required();
  oracle->add_option("--alphabet", o.alphabet)->required();
  oracle->add_option("--packing", o.packing);
  oracle->add_option("--label", o.label);
  oracle->add_flag("--composed", o.composed);
  oracle->add_option("--output", o.output);
  handlers[oracle] = cmd_build_oracle_net;

  auto* run_cmd = app.add_subcommand("run", "run a net on a word");
  run_cmd->add_option("--net", o.net)->required();
  run_cmd->add_option("--word", o.word)->required();
  run_cmd->add_option("--budget", o.budget)->required();
  run_cmd->add_option("--precision", o.precision);
  run_cmd->add_flag("--trace", o.trace);
  handlers[run_cmd] = cmd_run;

  auto* classify = app.add_subcommand("classify", "power class of a net");
  classify->add_option("--net", o.net)->required();
  classify->add_option("--timing", o.timing);
  classify->add_option("--lattice", o.lattice);
  handlers[classify] = cmd_classify;

  auto* spike_encode =
      app.add_subcommand("spike-encode", "binary real -> spike schedule");
  spike_encode->add_option("--code", o.code);
  spike_encode->add_option("--language", o.spike_language);
  spike_encode->add_option("--window", o.window)->required();
  spike_encode->add_option("--label", o.label);
  spike_encode->add_option("--output", o.output);
  handlers[spike_encode] = cmd_spike_encode;

  auto* spike_decode =
      app.add_subcommand("spike-decode", "spike schedule -> binary digits");
  spike_decode->add_option("--schedule", o.schedule)->required();
  handlers[spike_decode] = cmd_spike_decode;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "arnn: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream buffered;
  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) handler(o, buffered);
    }
  } catch (const Error& e) {
    out << buffered.str();
    err << "arnn: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    out << buffered.str();
    err << "arnn: IOError: " << e.what() << "\n";
    return kExitUsage;
  }
  out << buffered.str();
  return kExitOk;
}

}  // namespace arnn
