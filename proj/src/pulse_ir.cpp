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

#include "selfnav/pulse_ir.hpp"

#include <cmath>

namespace selfnav {

namespace {

// Phases closer than this are the same axis line.
constexpr double kPhaseMatchTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool same_phase(double p, double q) {
  return std::abs(wrap_pi(q - p)) < kPhaseMatchTol;
}

bool antipodal_phase(double p, double q) {
  return std::abs(wrap_pi(q - p - kPi)) < kPhaseMatchTol;
}

/**
 * Merges `next` into `top` when they lie on one axis line. Returns false if
 * no rule applies; otherwise `merged` holds the canonical result (nullopt
 * when the pair cancels).
 */
bool try_merge(
    const PulseStep &top, const PulseStep &next,
    std::optional<PulseStep> &merged) {
  if (const auto *z1 = std::get_if<VirtualZ>(&top)) {
    const auto *z2 = std::get_if<VirtualZ>(&next);
    if (z2 == nullptr) return false;
    const auto z = canonical(VirtualZ{z1->alpha + z2->alpha});
    merged = z ? std::optional<PulseStep>(*z) : std::nullopt;
    return true;
  }
  const auto &p1 = std::get<XYPulse>(top);
  const auto *p2 = std::get_if<XYPulse>(&next);
  if (p2 == nullptr) return false;
  std::optional<XYPulse> p;
  if (same_phase(p1.phase, p2->phase)) {
    p = canonical(XYPulse{p1.phase, p1.angle + p2->angle});
  } else if (antipodal_phase(p1.phase, p2->phase)) {
    p = canonical(XYPulse{p1.phase, p1.angle - p2->angle});
  } else {
    return false;
  }
  merged = p ? std::optional<PulseStep>(*p) : std::nullopt;
  return true;
}

std::optional<PulseStep> canonical_step(const PulseStep &step) {
  return std::visit(
      [](const auto &s) -> std::optional<PulseStep> {
        auto c = canonical(s);
        return c ? std::optional<PulseStep>(*c) : std::nullopt;
      },
      step);
}

/** One stack-reduction pass. */
PulseSequence merge_pass(const PulseSequence &seq) {
  PulseSequence out;
  out.reserve(seq.size());
  for (const PulseStep &raw : seq) {
    const auto step = canonical_step(raw);
    if (!step) continue;
    std::optional<PulseStep> merged;
    if (!out.empty() && try_merge(out.back(), *step, merged)) {
      out.pop_back();
      if (merged) out.push_back(*merged);
    } else {
      out.push_back(*step);
    }
  }
  return out;
}

}  // namespace

std::optional<VirtualZ> canonical(VirtualZ step) {
  const double alpha = wrap_pi(step.alpha);
  if (std::abs(alpha) < kNegligibleAngle) return std::nullopt;
  return VirtualZ{alpha};
}

std::optional<XYPulse> canonical(XYPulse step) {
  double angle = wrap_two_pi(step.angle);
  double phase = step.phase;
  if (angle > kPi) {
    angle = kTwoPi - angle;
    phase += kPi;
  }
  if (angle < kNegligibleAngle) return std::nullopt;
  return XYPulse{wrap_two_pi(phase), angle};
}

Unitary2 step_unitary(const XYPulse &pulse) {
  return rotation_unitary(Axis3::xy(pulse.phase), pulse.angle);
}

Unitary2 step_unitary(const PulseStep &step) {
  return std::visit(
      Overloaded{
          [](const VirtualZ &z) { return z_rotation(z.alpha); },
          [](const XYPulse &p) { return step_unitary(p); }},
      step);
}

Unitary2 sequence_unitary(const PulseSequence &seq) {
  Unitary2 u = Unitary2::identity();
  for (const PulseStep &step : seq) u = compose(u, step_unitary(step));
  return u;
}

Unitary2 sequence_unitary(std::span<const XYPulse> pulses) {
  Unitary2 u = Unitary2::identity();
  for (const XYPulse &p : pulses) u = compose(u, step_unitary(p));
  return u;
}

Unitary2 framed_unitary(std::span<const XYPulse> pulses, double frame_phase) {
  return compose(sequence_unitary(pulses), z_rotation(frame_phase));
}

PulseSequence merge_adjacent(const PulseSequence &seq) {
  PulseSequence current = merge_pass(seq);
  for (;;) {
    PulseSequence next = merge_pass(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<XYPulse> merge_adjacent(std::span<const XYPulse> pulses) {
  const PulseSequence merged =
      merge_adjacent(PulseSequence(pulses.begin(), pulses.end()));
  std::vector<XYPulse> out;
  out.reserve(merged.size());
  for (const PulseStep &step : merged) out.push_back(std::get<XYPulse>(step));
  return out;
}

AbsorbedSchedule absorb_virtual_z(const PulseSequence &seq, bool merge_after) {
  AbsorbedSchedule out;
  double z_acc = 0.0;
  for (const PulseStep &step : seq) {
    if (const auto *z = std::get_if<VirtualZ>(&step)) {
      z_acc += z->alpha;
      continue;
    }
    const auto &p = std::get<XYPulse>(step);
    out.pulses.push_back(
        XYPulse{wrap_two_pi(p.phase + kFrameSign * z_acc), p.angle});
  }
  out.frame_phase = wrap_two_pi(z_acc);
  if (merge_after) out.pulses = merge_adjacent(out.pulses);
  return out;
}

double distance(const PulseSequence &seq) {
  double d = 0.0;
  for (const PulseStep &step : seq) {
    if (const auto *p = std::get_if<XYPulse>(&step)) d += p->angle;
  }
  return d;
}

double distance(std::span<const XYPulse> pulses) {
  double d = 0.0;
  for (const XYPulse &p : pulses) d += p.angle;
  return d;
}

int pulse_count(const PulseSequence &seq) {
  int n = 0;
  for (const PulseStep &step : seq) {
    if (std::holds_alternative<XYPulse>(step)) ++n;
  }
  return n;
}

int pulse_count(std::span<const XYPulse> pulses) {
  return static_cast<int>(pulses.size());
}

Unitary2 gate_unitary(const CompiledGate &gate) {
  return framed_unitary(gate.pulses, gate.frame_phase);
}

}  // namespace selfnav
