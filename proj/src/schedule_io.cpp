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

#include "selfnav/schedule_io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace selfnav {

namespace {

using json = nlohmann::ordered_json;

void emit(std::ostream &out, const json &j, int indent);

void newline(std::ostream &out, int indent) {
  out << '\n' << std::string(static_cast<std::size_t>(indent), ' ');
}

// Scalars and arrays of scalars stay on one line.
bool is_flat(const json &j) {
  if (j.is_object()) return false;
  if (!j.is_array()) return true;
  for (const auto &e : j) {
    if (!e.is_primitive()) return false;
  }
  return true;
}

void emit(std::ostream &out, const json &j, int indent) {
  if (j.is_number_float()) {
    out << format_real(j.get<double>());
  } else if (j.is_array()) {
    out << '[';
    if (j.empty()) {
      out << ']';
      return;
    }
    const bool flat = is_flat(j);
    bool first = true;
    for (const auto &e : j) {
      if (!first) out << (flat ? ", " : ",");
      first = false;
      if (!flat) newline(out, indent + 2);
      emit(out, e, indent + 2);
    }
    if (!flat) newline(out, indent);
    out << ']';
  } else if (j.is_object()) {
    out << '{';
    if (j.empty()) {
      out << '}';
      return;
    }
    bool first = true;
    for (const auto &[key, value] : j.items()) {
      if (!first) out << ',';
      first = false;
      newline(out, indent + 2);
      out << json(key).dump() << ": ";
      emit(out, value, indent + 2);
    }
    newline(out, indent);
    out << '}';
  } else {
    out << j.dump();
  }
}

template <class T>
T field(const json &j, const char *key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &e) {
    throw ScheduleFormatError(
        std::string("schedule field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Schedule make_schedule(
    const GateSpec &target, int n_axes, double eps_target,
    const CompiledGate &gate) {
  Schedule s;
  s.target = target;
  s.n_axes = n_axes;
  s.eps_target = eps_target;
  s.pulses = gate.pulses;
  s.frame_phase_rad = gate.frame_phase;
  s.epsilon = gate.epsilon;
  s.distance_rad = gate.distance;
  s.pulse_count = gate.pulse_count;
  s.iterations = gate.iterations;
  s.compile_time_s = gate.compile_time;
  return s;
}

std::string serialize_schedule(const Schedule &schedule) {
  json pulses = json::array();
  for (const XYPulse &p : schedule.pulses) {
    pulses.push_back(json{{"phase_rad", p.phase}, {"angle_rad", p.angle}});
  }
  const json j{
      {"target", to_json(schedule.target)},
      {"n_axes", schedule.n_axes},
      {"eps_target", schedule.eps_target},
      {"pulses", std::move(pulses)},
      {"frame_phase_rad", schedule.frame_phase_rad},
      {"epsilon", schedule.epsilon},
      {"distance_rad", schedule.distance_rad},
      {"pulse_count", schedule.pulse_count},
      {"iterations", schedule.iterations},
      {"compile_time_s", schedule.compile_time_s}};
  std::ostringstream out;
  emit(out, j, 0);
  out << '\n';
  return out.str();
}

Schedule parse_schedule(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ScheduleFormatError(std::string("malformed schedule: ") + e.what());
  }
  if (!j.is_object()) throw ScheduleFormatError("schedule must be an object");

  Schedule s;
  try {
    s.target = gate_spec_from_json(j.at("target"));
  } catch (const json::exception &e) {
    throw ScheduleFormatError(std::string("schedule target: ") + e.what());
  } catch (const GateSpecError &e) {
    throw ScheduleFormatError(std::string("schedule target: ") + e.what());
  }
  s.n_axes = field<int>(j, "n_axes");
  s.eps_target = field<double>(j, "eps_target");
  const json pulses = field<json>(j, "pulses");
  if (!pulses.is_array()) throw ScheduleFormatError("pulses must be an array");
  for (const auto &p : pulses) {
    s.pulses.push_back(
        {field<double>(p, "phase_rad"), field<double>(p, "angle_rad")});
  }
  s.frame_phase_rad = field<double>(j, "frame_phase_rad");
  s.epsilon = field<double>(j, "epsilon");
  s.distance_rad = field<double>(j, "distance_rad");
  s.pulse_count = field<int>(j, "pulse_count");
  s.iterations = field<int>(j, "iterations");
  s.compile_time_s = field<double>(j, "compile_time_s");
  return s;
}

std::string schedule_text(const Schedule &schedule) {
  std::ostringstream out;
  out << "target       " << to_json(schedule.target).dump() << '\n';
  if (schedule.n_axes == 0) {
    out << "compiler     u3 baseline\n";
  } else {
    out << "compiler     self-navigation, " << schedule.n_axes
        << " axes, eps_target " << format_real(schedule.eps_target) << '\n';
  }
  out << "pulses       " << schedule.pulse_count << '\n';
  for (std::size_t i = 0; i < schedule.pulses.size(); ++i) {
    out << "  [" << i << "] phase " << format_real(schedule.pulses[i].phase)
        << " rad, angle " << format_real(schedule.pulses[i].angle)
        << " rad\n";
  }
  out << "frame phase  " << format_real(schedule.frame_phase_rad) << " rad\n"
      << "epsilon      " << format_real(schedule.epsilon) << '\n'
      << "distance     " << format_real(schedule.distance_rad) << " rad\n"
      << "iterations   " << schedule.iterations << '\n'
      << "compile time " << format_real(schedule.compile_time_s) << " s\n";
  return out.str();
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow &r : rows) {
    out << r.n_axes << ',' << format_real(r.eps_target) << ','
        << format_real(r.eps_mean) << ',' << format_real(r.dist_mean) << ','
        << format_real(r.pulses_mean) << ',' << format_real(r.time_mean_s)
        << ',' << r.failures << '\n';
  }
}

}  // namespace selfnav
