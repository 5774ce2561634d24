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
#include <string>
#include <string_view>
#include <vector>

namespace arnn {

// One non-blank, non-comment line of a whitespace-separated record file.
struct Record {
  std::size_t number = 0;
  std::vector<std::string> fields;
};

// Splits a text stream into records; '#' starts a comment.
std::vector<Record> read_records(std::istream& in);

std::size_t parse_size(std::string_view text, std::size_t line);

// Writes through a temporary sibling file and renames it into place, so a
// failure never leaves a partial file behind.
void write_file_atomically(const std::string& path, const std::string& text);

std::string read_file(const std::string& path);

}  // namespace arnn
