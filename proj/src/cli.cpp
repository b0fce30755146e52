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

#include "selfnav/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "selfnav/bench.hpp"
#include "selfnav/errors.hpp"
#include "selfnav/gate_spec.hpp"
#include "selfnav/schedule_io.hpp"
#include "selfnav/sn_compiler.hpp"
#include "selfnav/u3_baseline.hpp"

namespace selfnav::cli {

namespace {

/** Raised for bad arguments that CLI11 itself cannot detect. */
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GateFlags {
  std::string gate;
  std::string euler;
  std::string axis;
  std::string angle;
  std::string matrix;
  std::string matrix_file;

  void attach(CLI::App &cmd) {
    cmd.add_option("--gate", gate, "Named gate: I X Y Z H S T SX");
    cmd.add_option("--euler", euler, "Euler angles theta,phi,lam (radians)");
    cmd.add_option("--axis", axis, "Rotation axis nx,ny,nz");
    cmd.add_option("--angle", angle, "Rotation angle for --axis (radians)");
    cmd.add_option("--matrix", matrix, "2x2 matrix as JSON");
    cmd.add_option("--matrix-file", matrix_file, "File holding a JSON matrix");
  }

  /** nullopt when no gate flag was given. */
  std::optional<GateSpec> parse() const {
    const int given = !gate.empty() + !euler.empty() + !axis.empty() +
                      !matrix.empty() + !matrix_file.empty();
    if (given > 1) throw UsageError("give exactly one gate specification");
    if (!angle.empty() && axis.empty()) {
      throw UsageError("--angle requires --axis");
    }
    if (!gate.empty()) return parse_named(gate);
    if (!euler.empty()) return parse_euler(euler);
    if (!axis.empty()) {
      if (angle.empty()) throw UsageError("--axis requires --angle");
      return parse_axis_angle(axis, angle);
    }
    if (!matrix.empty()) return parse_matrix(matrix);
    if (!matrix_file.empty()) return parse_matrix_file(matrix_file);
    return std::nullopt;
  }
};

std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw UsageError("malformed integer list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::pair<int, int> parse_decades(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("--eps-decades expects FIRST:LAST, got '" + text + "'");
  }
  try {
    const int first = std::stoi(text.substr(0, colon));
    const int last = std::stoi(text.substr(colon + 1));
    if (first < 1 || last < first) throw std::invalid_argument(text);
    return {first, last};
  } catch (const std::exception &) {
    throw UsageError("--eps-decades expects 1 <= FIRST <= LAST");
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_compile(
    const GateFlags &flags, int n_axes, double eps_target, bool baseline,
    const std::string &format, const std::string &out_path, std::ostream &out,
    std::ostream &err) {
  const std::optional<GateSpec> spec = flags.parse();
  if (!spec) throw UsageError("compile needs a gate specification");
  if (!(eps_target > 0.0 && eps_target < 1.0)) {
    throw UsageError("--epsilon must lie in (0, 1)");
  }
  const Unitary2 target = resolve(*spec);

  Schedule schedule;
  if (baseline) {
    schedule = make_schedule(*spec, 0, eps_target, u3_compile(target).gate);
  } else {
    const AxisSet axes = allowed_axes(n_axes);
    SnConfig config;
    config.eps_target = eps_target;
    try {
      schedule = make_schedule(
          *spec, n_axes, eps_target, sn_compile(target, axes, config).gate);
    } catch (const CompileFailure &failure) {
      err << "compile failed: " << failure.what() << '\n'
          << "best-so-far schedule has " << failure.best_so_far().size()
          << " steps\n";
      return kExitFailure;
    }
  }

  const std::string text = format == "text" ? schedule_text(schedule)
                                            : serialize_schedule(schedule);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!(file << text)) {
      err << "cannot write " << out_path << '\n';
      return kExitFailure;
    }
  }
  return kExitOk;
}

int cmd_bench(
    const std::string &axes_text, const std::string &decades_text,
    unsigned threads, const std::string &order, const std::string &out_path,
    std::ostream &out, std::ostream &err) {
  const std::vector<int> axes_list = parse_int_list(axes_text);
  for (const int n : axes_list) allowed_axes(n);
  const auto [first, last] = parse_decades(decades_text);
  const std::vector<double> eps_list = eps_decades(first, last);

  std::ofstream file(out_path);
  if (!file) {
    err << "cannot write " << out_path << '\n';
    return kExitFailure;
  }
  const auto dataset = evaluation_dataset(
      order == "zx" ? DatasetOrder::kZThenX : DatasetOrder::kXThenZ);
  SweepOptions options;
  options.threads = threads;
  const auto rows = run_sweep(axes_list, eps_list, dataset, options);
  write_sweep_csv(file, rows);
  if (!file) {
    err << "failed writing " << out_path << '\n';
    return kExitFailure;
  }
  out << "wrote " << rows.size() << " rows to " << out_path << '\n';
  return kExitOk;
}

int cmd_verify(
    const GateFlags &flags, const std::string &schedule_path,
    std::ostream &out, std::ostream &err) {
  Schedule schedule;
  try {
    schedule = parse_schedule(read_file(schedule_path));
  } catch (const std::exception &e) {
    err << e.what() << '\n';
    return kExitFailure;
  }
  const std::optional<GateSpec> spec = flags.parse();
  const Unitary2 target = resolve(spec ? *spec : schedule.target);
  const Unitary2 realized =
      framed_unitary(schedule.pulses, schedule.frame_phase_rad);
  const double epsilon = 1.0 - hs_fidelity(target, realized);
  const bool ok = epsilon <= schedule.epsilon + kVerifySlack;
  out << "epsilon " << format_real(epsilon) << '\n'
      << "declared " << format_real(schedule.epsilon) << '\n'
      << "status " << (ok ? "ok" : "mismatch") << '\n';
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Single-qubit gate compiler for XY-plane pulses and virtual-Z"};
  app.require_subcommand(1);

  GateFlags compile_gate;
  int n_axes = 18;
  double epsilon = 1e-4;
  bool baseline = false;
  std::string format = "json";
  std::string compile_out;
  CLI::App *compile = app.add_subcommand("compile", "Compile one gate");
  compile_gate.attach(*compile);
  compile->add_option("--axes", n_axes, "Number of allowed axes");
  compile->add_option("--epsilon", epsilon, "Target gate error");
  compile->add_flag("--baseline", baseline, "Use the U3 baseline compiler");
  compile->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  compile->add_option("--out", compile_out, "Write output to a file");

  std::string axes_list = "6,10,18,34";
  std::string decades = "1:8";
  unsigned threads = 0;
  std::string order = "xz";
  std::string bench_out;
  CLI::App *bench = app.add_subcommand("bench", "Run the evaluation sweep");
  bench->add_option("--axes-list", axes_list, "Comma-separated axis counts");
  bench->add_option("--eps-decades", decades, "Decade range FIRST:LAST");
  bench->add_option("--threads", threads, "Worker threads (0 = all cores)");
  bench->add_option("--order", order, "Dataset rotation order")
      ->check(CLI::IsMember({"xz", "zx"}));
  bench->add_option("--out", bench_out, "CSV output path")->required();

  GateFlags verify_gate;
  std::string schedule_path;
  CLI::App *verify =
      app.add_subcommand("verify", "Re-evaluate a schedule against a gate");
  verify_gate.attach(*verify);
  verify->add_option("--schedule", schedule_path, "Schedule JSON")
      ->required();

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*compile) {
      return cmd_compile(
          compile_gate, n_axes, epsilon, baseline, format, compile_out, out,
          err);
    }
    if (*bench) {
      return cmd_bench(axes_list, decades, threads, order, bench_out, out, err);
    }
    return cmd_verify(verify_gate, schedule_path, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    // GateSpecError, InvalidAxis, InvalidUnitary, InvalidConfiguration.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace selfnav::cli
