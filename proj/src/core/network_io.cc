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

#include "arnn/core/network_io.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "arnn/error.h"
#include "arnn/util/text.h"

namespace arnn {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string scalar_text(const ExactScalar& x,
                        const std::map<const OracleTable*, std::string>& paths) {
  std::string text;
  switch (x.kind()) {
    case ExactScalar::Kind::kInteger:
      text = "int:" + x.as_integer().get_str();
      break;
    case ExactScalar::Kind::kRational:
      text = "rat:" + to_string(x.as_rational());
      break;
    case ExactScalar::Kind::kOracle: {
      auto it = paths.find(x.as_oracle().table.get());
      if (it == paths.end()) {
        fail(ErrorCode::kConfigError,
             "no file recorded for an oracle table in this network");
      }
      text = "oracle:" + it->second + ":" + to_string(x.as_oracle().packing);
      break;
    }
    case ExactScalar::Kind::kStream:
      fail(ErrorCode::kConfigError,
           "stream scalars have no network-file spelling");
  }
  if (x.label()) text += ":" + x.label()->name();
  return text;
}

}  // namespace

ExactScalar parse_scalar(const std::string& text, const std::string& base_dir) {
  std::vector<std::string> parts = split(text, ':');
  const std::string& kind = parts[0];
  std::optional<DegreeLabel> label;
  if (kind == "int" && (parts.size() == 2 || parts.size() == 3)) {
    if (parts.size() == 3) label.emplace(parts[2]);
    ExactScalar x = ExactScalar::integer(parse_integer(parts[1]));
    return label ? x.with_label(*label) : x;
  }
  if (kind == "rat" && (parts.size() == 2 || parts.size() == 3)) {
    if (parts.size() == 3) label.emplace(parts[2]);
    ExactScalar x = ExactScalar::rational(parse_rational(parts[1]));
    return label ? x.with_label(*label) : x;
  }
  if (kind == "oracle" && (parts.size() == 3 || parts.size() == 4)) {
    if (parts.size() == 4) label.emplace(parts[3]);
    std::filesystem::path path(parts[1]);
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    auto table = std::make_shared<const OracleTable>(
        OracleTable::load(path.string()));
    return ExactScalar::oracle(std::move(table), parse_packing(parts[2]),
                               label);
  }
  fail(ErrorCode::kParseError, "bad scalar '" + text + "'");
}

Network parse_network(std::istream& in, const std::string& base_dir) {
  std::vector<Record> records = read_records(in);
  if (records.empty()) fail(ErrorCode::kParseError, "empty network file");

  const Record& header = records.front();
  const auto& h = header.fields;
  if (h.size() != 4 || h[0] != "neurons" || h[2] != "inputs") {
    fail(ErrorCode::kParseError,
         "network file must start with 'neurons N inputs M'");
  }
  Network net(parse_size(h[1], header.number), parse_size(h[3], header.number));

  // Identical oracle references share one table.
  std::map<std::string, ExactScalar> oracle_cache;
  auto scalar = [&](const std::string& text) {
    if (text.rfind("oracle:", 0) != 0) return parse_scalar(text, base_dir);
    auto it = oracle_cache.find(text);
    if (it == oracle_cache.end()) {
      it = oracle_cache.emplace(text, parse_scalar(text, base_dir)).first;
    }
    return it->second;
  };

  std::optional<std::size_t> out_data, out_valid, out_flag;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    const std::size_t line = records[r].number;
    const std::string where = "line " + std::to_string(line) + ": ";
    try {
      if (f[0] == "a" && f.size() == 4) {
        net.set_state_weight(parse_size(f[1], line), parse_size(f[2], line),
                             scalar(f[3]));
      } else if (f[0] == "b" && f.size() == 4) {
        net.set_input_weight(parse_size(f[1], line), parse_size(f[2], line),
                             scalar(f[3]));
      } else if (f[0] == "c" && f.size() == 3) {
        net.set_bias(parse_size(f[1], line), scalar(f[2]));
      } else if (f[0] == "activation" && f.size() == 3) {
        if (f[2] != "sat" && f[2] != "sig") {
          fail(ErrorCode::kParseError, "activation must be sat or sig");
        }
        net.set_activation(parse_size(f[1], line), f[2] == "sig"
                                                       ? Activation::kSignal
                                                       : Activation::kSaturatedLinear);
      } else if (f[0] == "out_data" && f.size() == 2) {
        out_data = parse_size(f[1], line);
      } else if (f[0] == "out_valid" && f.size() == 2) {
        out_valid = parse_size(f[1], line);
      } else if (f[0] == "out_flag" && f.size() == 2) {
        out_flag = parse_size(f[1], line);
      } else if (f[0] == "alphabet" && f.size() == 2) {
        net.set_alphabet(Alphabet(f[1]));
      } else {
        fail(ErrorCode::kParseError, "unrecognized network record");
      }
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }
  if (!out_data || !out_valid) {
    fail(ErrorCode::kParseError, "network file needs out_data and out_valid");
  }
  net.set_outputs(*out_data, *out_valid, out_flag);
  return net;
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open network file " + path);
  std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_network(in, dir.empty() ? "." : dir);
}

std::string serialize_network(
    const Network& net,
    const std::map<const OracleTable*, std::string>& table_paths) {
  std::ostringstream out;
  const std::size_t n = net.neurons();
  out << "neurons " << n << " inputs " << net.inputs() << "\n";
  if (net.alphabet()) out << "alphabet " << net.alphabet()->symbols() << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    if (net.activation(i) == Activation::kSignal) {
      out << "activation " << i << " sig\n";
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExactScalar& w = net.state_weight(i, j);
      if (w.is_zero() && !w.label()) continue;
      out << "a " << i << " " << j << " " << scalar_text(w, table_paths)
          << "\n";
    }
    for (std::size_t j = 0; j <= net.inputs(); ++j) {
      const ExactScalar& w = net.input_weight(i, j);
      if (w.is_zero() && !w.label()) continue;
      out << "b " << i << " " << j << " " << scalar_text(w, table_paths)
          << "\n";
    }
    const ExactScalar& c = net.bias(i);
    if (!c.is_zero() || c.label()) {
      out << "c " << i << " " << scalar_text(c, table_paths) << "\n";
    }
  }
  out << "out_data " << net.out_data() << "\n";
  out << "out_valid " << net.out_valid() << "\n";
  if (net.out_flag()) out << "out_flag " << *net.out_flag() << "\n";
  return out.str();
}

}  // namespace arnn
