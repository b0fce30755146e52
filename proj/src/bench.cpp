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

#include "selfnav/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "selfnav/errors.hpp"

namespace selfnav {

std::vector<EvalTarget> evaluation_dataset(DatasetOrder order) {
  constexpr int kThetaCount = 8;
  constexpr int kPhiCount = 16;
  std::vector<EvalTarget> out;
  out.reserve(kThetaCount * kPhiCount);
  for (int k = 0; k < kThetaCount; ++k) {
    const double theta = kPi * k / (kThetaCount - 1);
    for (int j = 0; j < kPhiCount; ++j) {
      const double varphi = kTwoPi * j / kPhiCount;
      const Unitary2 x = x_rotation(theta);
      const Unitary2 z = z_rotation(varphi);
      const Unitary2 u =
          order == DatasetOrder::kXThenZ ? compose(x, z) : compose(z, x);
      out.push_back({theta, varphi, u});
    }
  }
  return out;
}

std::vector<int> default_axes_list() { return {6, 10, 18, 34}; }

std::vector<double> eps_decades(int first, int last) {
  std::vector<double> out;
  for (int k = first; k <= last; ++k) out.push_back(std::pow(10.0, -k));
  return out;
}

std::vector<GateOutcome> run_cell(
    int n_axes, double eps_target, std::span<const EvalTarget> dataset,
    const SweepOptions &options) {
  const AxisSet axes = allowed_axes(n_axes);
  SnConfig config;
  config.eps_target = eps_target;
  config.max_iters = options.max_iters;
  config.validate();

  std::vector<std::optional<GateOutcome>> slots(dataset.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < dataset.size(); i = next++) {
      try {
        slots[i].emplace(sn_compile(dataset[i].unitary, axes, config));
      } catch (const CompileFailure &failure) {
        slots[i].emplace(failure);
      }
    }
  };

  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, dataset.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<GateOutcome> out;
  out.reserve(slots.size());
  for (auto &slot : slots) out.push_back(std::move(*slot));
  return out;
}

SweepRow aggregate(
    int n_axes, double eps_target, std::span<const GateOutcome> outcomes) {
  SweepRow row;
  row.n_axes = n_axes;
  row.eps_target = eps_target;
  int ok = 0;
  for (const GateOutcome &outcome : outcomes) {
    const auto *result = std::get_if<CompileResult>(&outcome);
    if (result == nullptr) {
      ++row.failures;
      continue;
    }
    ++ok;
    row.eps_mean += result->gate.epsilon;
    row.dist_mean += result->gate.distance;
    row.pulses_mean += result->gate.pulse_count;
    row.time_mean_s += result->gate.compile_time;
  }
  if (ok > 0) {
    row.eps_mean /= ok;
    row.dist_mean /= ok;
    row.pulses_mean /= ok;
    row.time_mean_s /= ok;
  }
  return row;
}

std::vector<SweepRow> run_sweep(
    std::span<const int> axes_list, std::span<const double> eps_list,
    std::span<const EvalTarget> dataset, const SweepOptions &options) {
  std::vector<SweepRow> rows;
  rows.reserve(axes_list.size() * eps_list.size());
  for (const int n_axes : axes_list) {
    for (const double eps : eps_list) {
      const auto outcomes = run_cell(n_axes, eps, dataset, options);
      rows.push_back(aggregate(n_axes, eps, outcomes));
    }
  }
  return rows;
}

FitResult fit_log_model(
    std::span<const double> eps, std::span<const double> ys) {
  if (eps.size() != ys.size()) {
    throw InsufficientData("fit_log_model: xs and ys differ in length");
  }
  if (eps.size() < 3) {
    throw InsufficientData("fit_log_model: need at least 3 points");
  }
  const auto n = static_cast<double>(eps.size());
  std::vector<double> xs;
  xs.reserve(eps.size());
  for (const double e : eps) {
    if (!(e > 0.0 && e < 1.0)) {
      throw DomainError("fit_log_model: eps_target must lie in (0, 1)");
    }
    xs.push_back(-std::log10(e));
  }

  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= n;
  y_mean /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - x_mean;
    const double dy = ys[i] - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    ss_tot += dy * dy;
  }
  if (sxx == 0.0) {
    throw InsufficientData("fit_log_model: all eps_target values coincide");
  }

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r2 = ss_tot == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
  return fit;
}

}  // namespace selfnav
