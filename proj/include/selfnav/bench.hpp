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

#include <span>
#include <variant>
#include <vector>

#include "selfnav/sn_compiler.hpp"
#include "selfnav/su2.hpp"

namespace selfnav {

struct EvalTarget {
  double theta = 0.0;
  double varphi = 0.0;
  Unitary2 unitary;
};

/** Order in which the two dataset rotations are applied. */
enum class DatasetOrder {
  /** X_theta first, then Z_varphi: unitary Z_varphi * X_theta. */
  kXThenZ,
  /** Z_varphi first, then X_theta: unitary X_theta * Z_varphi. */
  kZThenX,
};

/**
 * The 128-gate evaluation grid: theta_k = k pi / 7 (k = 0..7, both ends of
 * [0, pi]) and varphi_j = 2 pi j / 16 (j = 0..15), theta-major.
 */
std::vector<EvalTarget> evaluation_dataset(
    DatasetOrder order = DatasetOrder::kXThenZ);

/** Default sweep axes: 6, 10, 18, 34. */
std::vector<int> default_axes_list();
/** 10^-first .. 10^-last, one value per decade. */
std::vector<double> eps_decades(int first, int last);

struct SweepRow {
  int n_axes = 0;
  double eps_target = 0.0;
  double eps_mean = 0.0;
  double dist_mean = 0.0;
  double pulses_mean = 0.0;
  double time_mean_s = 0.0;
  int failures = 0;
};

/** Per-target outcome of one sweep cell, in dataset order. */
using GateOutcome = std::variant<CompileResult, CompileFailure>;

struct SweepOptions {
  /** Worker threads; 0 picks std::thread::hardware_concurrency(). */
  unsigned threads = 0;
  int max_iters = 10000;
};

/**
 * Compiles every dataset target for one (n_axes, eps_target) cell.
 * Work may run in parallel; results are returned in dataset order.
 */
std::vector<GateOutcome> run_cell(
    int n_axes, double eps_target, std::span<const EvalTarget> dataset,
    const SweepOptions &options = {});

/** Means over successful outcomes; failures are counted, not averaged. */
SweepRow aggregate(
    int n_axes, double eps_target, std::span<const GateOutcome> outcomes);

/** One row per (n_axes, eps_target), axes-major, in input order. */
std::vector<SweepRow> run_sweep(
    std::span<const int> axes_list, std::span<const double> eps_list,
    std::span<const EvalTarget> dataset, const SweepOptions &options = {});

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/**
 * Ordinary least squares of y = slope * log10(1 / eps) + intercept.
 * r2 is 1 when the ys have no variance. Throws InsufficientData below three
 * points and DomainError for eps outside (0, 1).
 */
FitResult fit_log_model(std::span<const double> eps, std::span<const double> ys);

}  // namespace selfnav
