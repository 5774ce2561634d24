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

#include <ostream>
#include <string>
#include <vector>

namespace arnn {

// Exit codes of the command-line front end.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Runs one subcommand. `args` excludes the program name. Results go to
// `out`; failures print one diagnostic line naming the error to `err`.
//
//   index --alphabet ab (--string s | --index i)
//   encode --language L.lang --digits n [--table out.oracle]
//   decode (--code digits | --table t.oracle) --alphabet ab --string s
//   compile-dfa --dfa d.dfa [--output d.net]
//   compile-two-stack --machine m.tsm [--output m.net]
//   build-oracle-net --table t.oracle --alphabet ab [--packing cantor4]
//                    [--label 0'] [--composed] [--output o.net]
//   run --net n.net --word w --budget ticks [--precision digits] [--trace]
//   classify --net n.net [--timing label]... [--lattice l.txt]
//   spike-encode (--code digits | --language L.lang) --window n
//                [--label d] [--output s.spikes]
//   spike-decode --schedule s.spikes
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace arnn
