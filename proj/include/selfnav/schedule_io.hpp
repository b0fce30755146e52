// Copyright 2026 The selfnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "selfnav/bench.hpp"
#include "selfnav/gate_spec.hpp"
#include "selfnav/pulse_ir.hpp"

namespace selfnav {

class ScheduleFormatError : public std::runtime_error {
 public:
  explicit ScheduleFormatError(const std::string &message)
      : std::runtime_error(message) {}
};

/** On-disk form of a compiled gate. */
struct Schedule {
  GateSpec target;
  /** 0 marks the U3 baseline. */
  int n_axes = 0;
  double eps_target = 0.0;
  std::vector<XYPulse> pulses;
  double frame_phase_rad = 0.0;
  double epsilon = 0.0;
  double distance_rad = 0.0;
  int pulse_count = 0;
  int iterations = 0;
  double compile_time_s = 0.0;
};

Schedule make_schedule(
    const GateSpec &target, int n_axes, double eps_target,
    const CompiledGate &gate);

/**
 * Canonical JSON: fixed key order, two-space indent, reals with 17
 * significant digits. serialize(parse(serialize(s))) == serialize(s).
 */
std::string serialize_schedule(const Schedule &schedule);

/** Throws ScheduleFormatError on malformed input. */
Schedule parse_schedule(std::string_view text);

/** Human-readable summary. */
std::string schedule_text(const Schedule &schedule);

/** Formats a real with 17 significant digits. */
std::string format_real(double value);

inline constexpr std::string_view kSweepCsvHeader =
    "n_axes,eps_target,eps_mean,dist_mean,pulses_mean,time_mean_s,failures";

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);

}  // namespace selfnav
