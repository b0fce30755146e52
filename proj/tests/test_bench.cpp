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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "selfnav/bench.hpp"
#include "selfnav/errors.hpp"

namespace selfnav {
namespace {

using Catch::Matchers::WithinAbs;

SCENARIO("evaluation_dataset grid") {
  const auto data = evaluation_dataset();
  REQUIRE(data.size() == 128);
  CHECK(hs_fidelity(data[0].unitary, Unitary2::identity()) == 1.0);
  const EvalTarget &x_pi = data[7 * 16 + 0];
  CHECK_THAT(x_pi.theta, WithinAbs(kPi, 1e-15));
  CHECK(x_pi.varphi == 0.0);
  CHECK_THAT(hs_fidelity(x_pi.unitary, x_rotation(kPi)), WithinAbs(1.0, 1e-15));
  for (int k = 0; k < 8; ++k) {
    for (int j = 0; j < 16; ++j) {
      const EvalTarget &e = data[k * 16 + j];
      REQUIRE_THAT(e.theta, WithinAbs(k * kPi / 7, 1e-15));
      REQUIRE_THAT(e.varphi, WithinAbs(j * kTwoPi / 16, 1e-15));
      REQUIRE(
          oracle::fidelity(
              oracle::to_eigen(e.unitary),
              oracle::z_rot(e.varphi) * oracle::x_rot(e.theta)) >
          1.0 - 1e-12);
    }
  }
  GIVEN("the reversed order") {
    const auto zx = evaluation_dataset(DatasetOrder::kZThenX);
    const EvalTarget &e = zx[3 * 16 + 5];
    CHECK(
        oracle::fidelity(
            oracle::to_eigen(e.unitary),
            oracle::x_rot(e.theta) * oracle::z_rot(e.varphi)) > 1.0 - 1e-12);
  }
}

TEST_CASE("eps_decades") {
  const auto eps = eps_decades(1, 8);
  REQUIRE(eps.size() == 8);
  CHECK(eps.front() == 0.1);
  CHECK(eps.back() == 1e-8);
}

SCENARIO("fit_log_model examples") {
  const std::vector<double> eps{1e-1, 1e-2, 1e-3};
  GIVEN("an exact line") {
    const std::vector<double> ys{2.0, 4.0, 6.0};
    const FitResult fit = fit_log_model(eps, ys);
    CHECK_THAT(fit.slope, WithinAbs(2.0, 1e-12));
    CHECK_THAT(fit.intercept, WithinAbs(0.0, 1e-12));
    CHECK_THAT(fit.r2, WithinAbs(1.0, 1e-12));
  }
  GIVEN("a constant") {
    const std::vector<double> ys{3.0, 3.0, 3.0};
    const FitResult fit = fit_log_model(eps, ys);
    CHECK(fit.slope == 0.0);
    CHECK(fit.r2 == 1.0);
    CHECK_THAT(fit.intercept, WithinAbs(3.0, 1e-12));
  }
  GIVEN("too few points") {
    const std::vector<double> two{1e-1, 1e-2};
    CHECK_THROWS_AS(fit_log_model(two, two), InsufficientData);
  }
  GIVEN("eps outside (0, 1)") {
    const std::vector<double> bad{1e-1, 1.0, 1e-3};
    CHECK_THROWS_AS(fit_log_model(bad, eps), DomainError);
  }
}

TEST_CASE("fit_log_model residuals are orthogonal to the regressors") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 8;
    std::vector<double> eps;
    std::vector<double> ys;
    for (int i = 0; i < n; ++i) {
      eps.push_back(std::pow(10.0, -(1.0 + 7.0 * unit(rng))));
      ys.push_back(10.0 * unit(rng));
    }
    const FitResult fit = fit_log_model(eps, ys);
    double sum_r = 0.0;
    double sum_rx = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = -std::log10(eps[i]);
      const double r = ys[i] - (fit.slope * x + fit.intercept);
      sum_r += r;
      sum_rx += r * x;
    }
    REQUIRE(std::abs(sum_r) < 1e-9);
    REQUIRE(std::abs(sum_rx) < 1e-9);
    REQUIRE(fit.r2 >= 0.0);
    REQUIRE(fit.r2 <= 1.0);
  }
}

TEST_CASE("aggregate counts failures without averaging them") {
  const auto data = evaluation_dataset();
  std::vector<GateOutcome> outcomes;
  SnConfig config;
  config.eps_target = 1e-3;
  const AxisSet axes = allowed_axes(18);
  const CompileResult ok = sn_compile(data[20].unitary, axes, config);
  outcomes.emplace_back(ok);
  outcomes.emplace_back(ok);
  outcomes.emplace_back(
      CompileFailure(CompileFailure::Reason::kMaxIters, {}, 0.5, 3));
  const SweepRow row = aggregate(18, 1e-3, outcomes);
  CHECK(row.failures == 1);
  CHECK(row.eps_mean == ok.gate.epsilon);
  CHECK(row.dist_mean == ok.gate.distance);
  CHECK(row.pulses_mean == ok.gate.pulse_count);
}

TEST_CASE("run_cell is order-deterministic across thread counts") {
  const auto data = evaluation_dataset();
  SweepOptions serial;
  serial.threads = 1;
  SweepOptions parallel;
  parallel.threads = 4;
  const auto a = run_cell(10, 1e-5, data, serial);
  const auto b = run_cell(10, 1e-5, data, parallel);
  REQUIRE(a.size() == data.size());
  REQUIRE(b.size() == data.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto &ra = std::get<CompileResult>(a[i]);
    const auto &rb = std::get<CompileResult>(b[i]);
    REQUIRE(ra.gate.pulses == rb.gate.pulses);
    REQUIRE(ra.gate.frame_phase == rb.gate.frame_phase);
    REQUIRE(ra.gate.epsilon == rb.gate.epsilon);
  }
}

SCENARIO("run_sweep rows") {
  const auto data = evaluation_dataset();
  const std::vector<int> axes{18};
  const std::vector<double> eps{1e-2, 1e-6};
  const auto rows = run_sweep(axes, eps, data);
  REQUIRE(rows.size() == 2);
  for (const SweepRow &row : rows) {
    CHECK(row.failures == 0);
    CHECK(row.eps_mean <= row.eps_target);
    CHECK(row.dist_mean >= 0.0);
    CHECK(row.pulses_mean >= 0.0);
  }
  const SweepRow &tight = rows[1];
  CHECK(tight.n_axes == 18);
  CHECK(tight.eps_target == 1e-6);
  CHECK(tight.dist_mean >= 1.8);
  CHECK(tight.dist_mean <= 2.6);
  CHECK(tight.dist_mean < kPi);

  const auto again = run_sweep(axes, eps, data);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(again[i].eps_mean == rows[i].eps_mean);
    CHECK(again[i].dist_mean == rows[i].dist_mean);
    CHECK(again[i].pulses_mean == rows[i].pulses_mean);
    CHECK(again[i].failures == rows[i].failures);
  }
}

}  // namespace
}  // namespace selfnav
