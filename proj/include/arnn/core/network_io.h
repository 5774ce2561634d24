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

#include <istream>
#include <map>
#include <string>

#include "arnn/core/network.h"

namespace arnn {

// Network file:
//
//   neurons N inputs M
//   alphabet ab            (optional)
//   a i j <scalar>
//   b i j <scalar>         (j = M is the validation line)
//   c i <scalar>
//   activation i sat|sig
//   out_data i
//   out_valid i
//   out_flag i             (optional)
//
// Scalars are int:k, rat:p/q or oracle:<table-file>:<packing>, each
// optionally followed by :<degree label>. Table paths are resolved against
// base_dir when relative.
Network parse_network(std::istream& in, const std::string& base_dir = ".");
Network load_network(const std::string& path);

// Oracle tables are written as the paths given in table_paths (keyed by
// table address); an oracle scalar without a path is a ConfigError.
std::string serialize_network(
    const Network& net,
    const std::map<const OracleTable*, std::string>& table_paths = {});

ExactScalar parse_scalar(const std::string& text,
                         const std::string& base_dir = ".");

}  // namespace arnn
