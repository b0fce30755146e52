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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfnav/pulse_ir.hpp"
#include "selfnav/su2.hpp"

namespace selfnav {

/** One allowed rotation axis: +z, -z, or an XY-plane drive phase. */
struct AllowedAxis {
  enum class Kind { kZPlus, kZMinus, kXY };

  Kind kind = Kind::kXY;
  /** Drive phase in [0, 2pi); meaningful for kXY only. */
  double phase = 0.0;

  bool is_z_line() const { return kind != Kind::kXY; }
  Axis3 vector() const;

  friend bool operator==(const AllowedAxis &, const AllowedAxis &) = default;
};

/**
 * The action space of the greedy compiler: +z, -z, then n_axes - 2 phases
 * spaced uniformly around the XY-plane starting at 0.
 */
struct AxisSet {
  int n_axes = 0;
  std::vector<AllowedAxis> axes;
};

/** Throws InvalidConfiguration when n_axes < 4. */
AxisSet allowed_axes(int n_axes);

struct SnConfig {
  double eps_target = 1e-4;
  int max_iters = 10000;
  /** Trial-angle shrink factor when no axis improves the fidelity. */
  double damping_factor = 0.5;
  /** Damping gives up once the trial angle falls below this. */
  double min_angle = 1e-12;

  /** Throws InvalidConfiguration on out-of-range fields. */
  void validate() const;
};

struct StepChoice {
  std::size_t axis_index = 0;
  double fidelity = 0.0;
};

/**
 * Tries `step_angle` about every allowed axis, applied after `current`, and
 * returns the axis with the best fidelity to `target`. Ties go to the
 * earliest axis.
 */
StepChoice sn_step(
    const Unitary2 &current, const Unitary2 &target, const AxisSet &axes,
    double step_angle);

struct CompileReport {
  double achieved_epsilon = 0.0;
  int iterations = 0;
  /** Number of times a trial angle was shrunk. */
  int damped_steps = 0;
  double pre_pass_distance = 0.0;
  int pre_pass_pulse_count = 0;
  double distance = 0.0;
  int pulse_count = 0;
  double compile_time = 0.0;
  /** Schedule as emitted by the greedy loop, before merge and absorption. */
  PulseSequence raw_sequence;
  /** Fidelity after each accepted step. */
  std::vector<double> fidelity_trace;
};

struct CompileResult {
  CompiledGate gate;
  CompileReport report;
};

/** Greedy loop gave up. Carries the best schedule found so far. */
class CompileFailure : public std::runtime_error {
 public:
  enum class Reason { kMaxIters, kNoProgress };

  CompileFailure(
      Reason reason, PulseSequence best_so_far, double best_epsilon,
      int iterations);

  Reason reason() const { return reason_; }
  const PulseSequence &best_so_far() const { return best_so_far_; }
  double best_epsilon() const { return best_epsilon_; }
  int iterations() const { return iterations_; }

 private:
  Reason reason_;
  PulseSequence best_so_far_;
  double best_epsilon_;
  int iterations_;
};

/**
 * Self-navigation compile. Starting from the identity, each iteration
 * computes the residual angle from the current fidelity and applies it about
 * the best allowed axis; a step is accepted only if it strictly improves the
 * fidelity, otherwise the trial angle is damped. Stops once 1 - F is at or
 * below config.eps_target, then merges adjacent rotations and absorbs the
 * virtual-Z steps into pulse phases.
 *
 * Throws CompileFailure (kMaxIters or kNoProgress) and InvalidConfiguration.
 */
CompileResult sn_compile(
    const Unitary2 &target, const AxisSet &axes, const SnConfig &config);

std::string to_string(CompileFailure::Reason reason);

}  // namespace selfnav
