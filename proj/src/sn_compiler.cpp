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

#include "selfnav/sn_compiler.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <utility>

#include "selfnav/errors.hpp"

namespace selfnav {

namespace {

// Passes are exact, so the final gate may only drift by roundoff.
constexpr double kPassSlack = 1e-12;

PulseStep record_step(const AllowedAxis &axis, double angle) {
  switch (axis.kind) {
    case AllowedAxis::Kind::kZPlus:
      return VirtualZ{angle};
    case AllowedAxis::Kind::kZMinus:
      return VirtualZ{-angle};
    case AllowedAxis::Kind::kXY:
      break;
  }
  return XYPulse{axis.phase, angle};
}

std::string failure_message(
    CompileFailure::Reason reason, double best_epsilon, int iterations) {
  std::ostringstream msg;
  msg << to_string(reason) << " after " << iterations
      << " iterations (best epsilon " << best_epsilon << ")";
  return msg.str();
}

}  // namespace

Axis3 AllowedAxis::vector() const {
  switch (kind) {
    case Kind::kZPlus:
      return {0.0, 0.0, 1.0};
    case Kind::kZMinus:
      return {0.0, 0.0, -1.0};
    case Kind::kXY:
      break;
  }
  return Axis3::xy(phase);
}

AxisSet allowed_axes(int n_axes) {
  if (n_axes < 4) {
    throw InvalidConfiguration(
        "allowed_axes: n_axes must be at least 4, got " +
        std::to_string(n_axes));
  }
  AxisSet set;
  set.n_axes = n_axes;
  set.axes.reserve(static_cast<std::size_t>(n_axes));
  set.axes.push_back({AllowedAxis::Kind::kZPlus, 0.0});
  set.axes.push_back({AllowedAxis::Kind::kZMinus, 0.0});
  const int n_xy = n_axes - 2;
  for (int k = 0; k < n_xy; ++k) {
    set.axes.push_back(
        {AllowedAxis::Kind::kXY, kTwoPi * static_cast<double>(k) / n_xy});
  }
  return set;
}

void SnConfig::validate() const {
  if (!(eps_target > 0.0 && eps_target < 1.0)) {
    throw InvalidConfiguration("eps_target must lie in (0, 1)");
  }
  if (max_iters <= 0) {
    throw InvalidConfiguration("max_iters must be positive");
  }
  if (!(damping_factor > 0.0 && damping_factor < 1.0)) {
    throw InvalidConfiguration("damping_factor must lie in (0, 1)");
  }
  if (!(min_angle > 0.0)) {
    throw InvalidConfiguration("min_angle must be positive");
  }
}

StepChoice sn_step(
    const Unitary2 &current, const Unitary2 &target, const AxisSet &axes,
    double step_angle) {
  StepChoice best{0, -1.0};
  for (std::size_t i = 0; i < axes.axes.size(); ++i) {
    const Unitary2 trial =
        compose(current, rotation_unitary(axes.axes[i].vector(), step_angle));
    const double f = hs_fidelity(target, trial);
    if (f > best.fidelity) best = {i, f};
  }
  return best;
}

CompileFailure::CompileFailure(
    Reason reason, PulseSequence best_so_far, double best_epsilon,
    int iterations)
    : std::runtime_error(failure_message(reason, best_epsilon, iterations)),
      reason_(reason),
      best_so_far_(std::move(best_so_far)),
      best_epsilon_(best_epsilon),
      iterations_(iterations) {}

std::string to_string(CompileFailure::Reason reason) {
  switch (reason) {
    case CompileFailure::Reason::kMaxIters:
      return "MaxIters";
    case CompileFailure::Reason::kNoProgress:
      return "NoProgress";
  }
  return "unknown";
}

CompileResult sn_compile(
    const Unitary2 &target, const AxisSet &axes, const SnConfig &config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  CompileReport report;
  Unitary2 current = Unitary2::identity();
  double fidelity = hs_fidelity(target, current);

  while (1.0 - fidelity > config.eps_target) {
    if (report.iterations >= config.max_iters) {
      throw CompileFailure(
          CompileFailure::Reason::kMaxIters, report.raw_sequence,
          1.0 - fidelity, report.iterations);
    }
    double angle = residual_angle(fidelity);
    StepChoice choice = sn_step(current, target, axes, angle);
    while (!(choice.fidelity > fidelity)) {
      angle *= config.damping_factor;
      ++report.damped_steps;
      if (angle < config.min_angle) {
        throw CompileFailure(
            CompileFailure::Reason::kNoProgress, report.raw_sequence,
            1.0 - fidelity, report.iterations);
      }
      choice = sn_step(current, target, axes, angle);
    }
    const AllowedAxis &axis = axes.axes[choice.axis_index];
    current = compose(current, rotation_unitary(axis.vector(), angle));
    fidelity = choice.fidelity;
    report.raw_sequence.push_back(record_step(axis, angle));
    report.fidelity_trace.push_back(fidelity);
    ++report.iterations;
  }

  report.pre_pass_distance = distance(report.raw_sequence);
  report.pre_pass_pulse_count = pulse_count(report.raw_sequence);

  AbsorbedSchedule absorbed =
      absorb_virtual_z(merge_adjacent(report.raw_sequence));

  CompiledGate gate;
  gate.target = target;
  gate.pulses = std::move(absorbed.pulses);
  gate.frame_phase = absorbed.frame_phase;
  gate.epsilon = 1.0 - hs_fidelity(target, gate_unitary(gate));
  gate.distance = distance(gate.pulses);
  gate.pulse_count = pulse_count(gate.pulses);
  gate.iterations = report.iterations;
  if (gate.epsilon > config.eps_target + kPassSlack) {
    throw std::logic_error(
        "sn_compile: merge/absorb passes changed the gate unitary");
  }

  report.achieved_epsilon = gate.epsilon;
  report.distance = gate.distance;
  report.pulse_count = gate.pulse_count;
  report.compile_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  gate.compile_time = report.compile_time;
  return {std::move(gate), std::move(report)};
}

}  // namespace selfnav
