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

#include "selfnav/pulse_ir.hpp"
#include "selfnav/sn_compiler.hpp"
#include "selfnav/su2.hpp"

namespace selfnav {

/** Drive phase of the two fixed pi/2 pulses in the U3 schedule. */
inline constexpr double kU3PulsePhase = kPi / 2.0;

/**
 * Time-ordered U3 schedule
 *
 *   Z_{lam - pi/2}, P_{pi/2}, Z_{pi - theta}, P_{pi/2}, Z_{phi - pi/2}
 *
 * where P is a pi/2 pulse at drive phase kU3PulsePhase. The unitary equals
 * euler_matrix(theta, phi, lam) up to global phase. Identity virtual-Z steps
 * are omitted; the two pulses are always present.
 */
PulseSequence u3_sequence(double theta, double phi, double lam);

/**
 * Exact baseline: Euler decomposition, U3 schedule, virtual-Z absorption.
 * Always two pi/2 pulses (distance pi). Throws InvalidUnitary.
 */
CompileResult u3_compile(const Unitary2 &target);

}  // namespace selfnav
