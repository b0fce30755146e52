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

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "selfnav/su2.hpp"

namespace selfnav {

/** Frame shift of `alpha` radians about z. Costs no time and no pulse. */
struct VirtualZ {
  double alpha = 0.0;
  friend bool operator==(const VirtualZ &, const VirtualZ &) = default;
};

/** Physical rotation by `angle` about the XY-plane axis at drive `phase`. */
struct XYPulse {
  double phase = 0.0;
  double angle = 0.0;
  friend bool operator==(const XYPulse &, const XYPulse &) = default;
};

using PulseStep = std::variant<VirtualZ, XYPulse>;

/** Steps in time order: index 0 is applied first. */
using PulseSequence = std::vector<PulseStep>;

/** Angles below this are dropped as identities (up to global phase). */
inline constexpr double kNegligibleAngle = 1e-12;

/**
 * Canonical form: alpha folded into (-pi, pi]. Returns nullopt when the
 * step is the identity up to global phase.
 */
std::optional<VirtualZ> canonical(VirtualZ step);

/**
 * Canonical form: angle in (0, pi] and phase in [0, 2pi). A rotation by
 * theta in (pi, 2pi) becomes 2pi - theta about the antipodal phase.
 * Returns nullopt when the pulse is the identity up to global phase.
 */
std::optional<XYPulse> canonical(XYPulse step);

Unitary2 step_unitary(const PulseStep &step);
Unitary2 step_unitary(const XYPulse &pulse);

/** Later steps left-multiply. */
Unitary2 sequence_unitary(const PulseSequence &seq);
Unitary2 sequence_unitary(std::span<const XYPulse> pulses);

/** Unitary of `pulses` followed by a trailing Z_{frame_phase}. */
Unitary2 framed_unitary(std::span<const XYPulse> pulses, double frame_phase);

/**
 * Merges adjacent steps that share an axis line until nothing changes:
 * virtual-Z angles add, XY pulses with equal phases add, XY pulses with
 * antipodal phases subtract. Identity steps are removed. The unitary is
 * preserved up to global phase and the step count never grows.
 */
PulseSequence merge_adjacent(const PulseSequence &seq);
std::vector<XYPulse> merge_adjacent(std::span<const XYPulse> pulses);

struct AbsorbedSchedule {
  std::vector<XYPulse> pulses;
  /** Trailing virtual-Z, in [0, 2pi). */
  double frame_phase = 0.0;
};

/**
 * Sign of the frame accumulator in the emitted pulse phase:
 * phase' = phase + kFrameSign * z_acc. With Z_a = R_z(a) the identity
 * R_phi(theta) Z_a = Z_a R_{phi - a}(theta) fixes it at -1.
 */
inline constexpr double kFrameSign = -1.0;

/**
 * Pushes every virtual-Z to the end of the schedule by shifting the phases
 * of the XY pulses that follow it. The result satisfies
 * framed_unitary(pulses, frame_phase) == sequence_unitary(seq) up to global
 * phase. When `merge_after` is set the emitted pulses are merged again.
 */
AbsorbedSchedule absorb_virtual_z(
    const PulseSequence &seq, bool merge_after = true);

/** Sum of XY pulse angles; virtual-Z steps are free. */
double distance(const PulseSequence &seq);
double distance(std::span<const XYPulse> pulses);

/** Number of XY pulses. */
int pulse_count(const PulseSequence &seq);
int pulse_count(std::span<const XYPulse> pulses);

/**
 * Output of a compiler: a physical pulse schedule, one trailing frame
 * shift, and the metrics it was scored on.
 */
struct CompiledGate {
  Unitary2 target;
  std::vector<XYPulse> pulses;
  double frame_phase = 0.0;
  /** 1 - F against `target`, recomputed from the emitted schedule. */
  double epsilon = 0.0;
  double distance = 0.0;
  int pulse_count = 0;
  int iterations = 0;
  double compile_time = 0.0;
};

/** framed_unitary of the gate's pulses and frame phase. */
Unitary2 gate_unitary(const CompiledGate &gate);

}  // namespace selfnav
