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

#include <compare>
#include <string>
#include <utility>

namespace arnn {

// Name of a Turing degree. Labels are declared metadata; "0" is the degree
// of the computable sets and sits below every other label.
class DegreeLabel {
 public:
  explicit DegreeLabel(std::string name) : name_(std::move(name)) {}

  static DegreeLabel bottom() { return DegreeLabel("0"); }
  static DegreeLabel jump() { return DegreeLabel("0'"); }

  const std::string& name() const { return name_; }
  bool is_bottom() const { return name_ == "0"; }

  friend auto operator<=>(const DegreeLabel&, const DegreeLabel&) = default;

 private:
  std::string name_;
};

}  // namespace arnn
