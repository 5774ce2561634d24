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
#include <optional>
#include <string>
#include <vector>

#include "arnn/degrees/degree_label.h"
#include "arnn/numerics/unit_real.h"

namespace arnn {

// Spike times within a window of ticks 1..window, one tick per binary digit.
class SpikeSchedule {
 public:
  // Ticks strictly increasing and within 1..window; ConfigError otherwise.
  SpikeSchedule(std::vector<std::size_t> ticks, std::size_t window,
                std::optional<DegreeLabel> label = {});

  // Lines `window <n>`, then `spike <tick>` lines and an optional
  // `label <name>` line.
  static SpikeSchedule parse(std::istream& in);
  static SpikeSchedule load(const std::string& path);
  std::string serialize() const;

  const std::vector<std::size_t>& ticks() const { return ticks_; }
  std::size_t window() const { return window_; }
  const std::optional<DegreeLabel>& label() const { return label_; }

  friend bool operator==(const SpikeSchedule&, const SpikeSchedule&) = default;

 private:
  std::vector<std::size_t> ticks_;
  std::size_t window_;
  std::optional<DegreeLabel> label_;
};

// Spike at tick i iff digit i of the binary real is 1, for i in 1..window.
// EncodingError for a base-4 stream; HorizonExceeded propagated.
SpikeSchedule timing_encode(const UnitReal& r, std::size_t window);

// The binary real whose first `window` digits are the spike pattern, with
// horizon `window` and the schedule's label.
UnitReal timing_decode(const SpikeSchedule& schedule);

}  // namespace arnn
