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

#include "arnn/spike/spike_schedule.h"

#include <fstream>
#include <sstream>

#include "arnn/error.h"
#include "arnn/util/text.h"

namespace arnn {

SpikeSchedule::SpikeSchedule(std::vector<std::size_t> ticks,
                             std::size_t window,
                             std::optional<DegreeLabel> label)
    : ticks_(std::move(ticks)), window_(window), label_(std::move(label)) {
  std::size_t previous = 0;
  for (std::size_t t : ticks_) {
    if (t <= previous || t > window_) {
      fail(ErrorCode::kConfigError,
           "spike ticks must increase strictly within 1.." +
               std::to_string(window_) + ", got " + std::to_string(t));
    }
    previous = t;
  }
}

SpikeSchedule SpikeSchedule::parse(std::istream& in) {
  std::optional<std::size_t> window;
  std::vector<std::size_t> ticks;
  std::optional<DegreeLabel> label;
  for (const auto& record : read_records(in)) {
    const auto& f = record.fields;
    const std::string where = "line " + std::to_string(record.number) + ": ";
    if (f[0] == "window" && f.size() == 2 && !window) {
      window = parse_size(f[1], record.number);
    } else if (f[0] == "spike" && f.size() == 2) {
      ticks.push_back(parse_size(f[1], record.number));
    } else if (f[0] == "label" && f.size() == 2 && !label) {
      label.emplace(f[1]);
    } else {
      fail(ErrorCode::kParseError, where + "unrecognized schedule record");
    }
  }
  if (!window) fail(ErrorCode::kParseError, "schedule has no window line");
  return SpikeSchedule(std::move(ticks), *window, std::move(label));
}

SpikeSchedule SpikeSchedule::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open schedule file " + path);
  return parse(in);
}

std::string SpikeSchedule::serialize() const {
  std::ostringstream out;
  out << "window " << window_ << "\n";
  if (label_) out << "label " << label_->name() << "\n";
  for (std::size_t t : ticks_) out << "spike " << t << "\n";
  return out.str();
}

SpikeSchedule timing_encode(const UnitReal& r, std::size_t window) {
  if (r.base() != 2) {
    fail(ErrorCode::kEncodingError, "spike timing needs a binary real");
  }
  std::vector<std::size_t> ticks;
  for (std::size_t i = 1; i <= window; ++i) {
    if (r.digit_at(i) == 1) ticks.push_back(i);
  }
  return SpikeSchedule(std::move(ticks), window, r.label());
}

UnitReal timing_decode(const SpikeSchedule& schedule) {
  std::vector<int> digits(schedule.window(), 0);
  for (std::size_t t : schedule.ticks()) digits[t - 1] = 1;
  UnitReal r = UnitReal::from_digits(2, std::move(digits));
  if (schedule.label()) r = r.with_label(*schedule.label());
  return r;
}

}  // namespace arnn
