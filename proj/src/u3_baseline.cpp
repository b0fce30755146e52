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

#include "selfnav/u3_baseline.hpp"

#include <chrono>
#include <utility>

namespace selfnav {

namespace {

void push_z(PulseSequence &seq, double alpha) {
  if (const auto z = canonical(VirtualZ{alpha})) seq.push_back(*z);
}

}  // namespace

PulseSequence u3_sequence(double theta, double phi, double lam) {
  const XYPulse half_turn{kU3PulsePhase, kPi / 2.0};
  PulseSequence seq;
  push_z(seq, lam - kPi / 2.0);
  seq.push_back(half_turn);
  push_z(seq, kPi - theta);
  seq.push_back(half_turn);
  push_z(seq, phi - kPi / 2.0);
  return seq;
}

CompileResult u3_compile(const Unitary2 &target) {
  const auto start = std::chrono::steady_clock::now();
  const EulerZXZ angles = euler_zxz(target);
  const PulseSequence seq = u3_sequence(angles.theta, angles.phi, angles.lam);
  // No merge after absorption: the baseline keeps both pulses even when
  // they would cancel or fuse.
  AbsorbedSchedule absorbed = absorb_virtual_z(seq, /*merge_after=*/false);

  CompileResult result;
  CompiledGate &gate = result.gate;
  gate.target = target;
  gate.pulses = std::move(absorbed.pulses);
  gate.frame_phase = absorbed.frame_phase;
  gate.epsilon = 1.0 - hs_fidelity(target, gate_unitary(gate));
  gate.distance = distance(gate.pulses);
  gate.pulse_count = pulse_count(gate.pulses);
  gate.compile_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  CompileReport &report = result.report;
  report.achieved_epsilon = gate.epsilon;
  report.pre_pass_distance = distance(seq);
  report.pre_pass_pulse_count = pulse_count(seq);
  report.distance = gate.distance;
  report.pulse_count = gate.pulse_count;
  report.compile_time = gate.compile_time;
  report.raw_sequence = seq;
  return result;
}

}  // namespace selfnav
