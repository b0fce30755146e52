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
#include "selfnav/errors.hpp"
#include "selfnav/su2.hpp"

namespace selfnav {
namespace {

using Catch::Matchers::WithinAbs;

const Complex I_{0.0, 1.0};

Unitary2 hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  return {r, r, r, -r};
}

SCENARIO("rotation_unitary matches the axis-angle form") {
  GIVEN("a zero angle") {
    const Unitary2 u = rotation_unitary(Axis3(0.6, 0.0, 0.8), 0.0);
    REQUIRE(max_abs_diff(u, Unitary2::identity()) == 0.0);
  }
  GIVEN("a half turn about x") {
    const Unitary2 u = rotation_unitary(Axis3::x(), kPi);
    const Unitary2 expected{0.0, -I_, -I_, 0.0};
    REQUIRE(max_abs_diff(u, expected) < 1e-15);
  }
  GIVEN("a quarter turn about z") {
    const Unitary2 u = rotation_unitary(Axis3::z(), kPi / 2.0);
    const Unitary2 expected{
        std::polar(1.0, -kPi / 4.0), 0.0, 0.0, std::polar(1.0, kPi / 4.0)};
    REQUIRE(max_abs_diff(u, expected) < 1e-15);
  }
  GIVEN("a non-unit axis") {
    REQUIRE_THROWS_AS(Axis3(1.0, 1.0, 0.0), InvalidAxis);
    REQUIRE_THROWS_AS(Axis3(1.0 + 1e-8, 0.0, 0.0), InvalidAxis);
    REQUIRE_NOTHROW(Axis3(1.0 + 1e-10, 0.0, 0.0));
  }
}

TEST_CASE("rotation_unitary agrees with the Pauli-matrix oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const Axis3 n = oracle::random_axis(rng);
    const double t = angle(rng);
    const auto expected =
        oracle::from_eigen(oracle::rotation(n.nx(), n.ny(), n.nz(), t));
    REQUIRE(max_abs_diff(rotation_unitary(n, t), expected) < 1e-14);
  }
}

TEST_CASE("rotation_unitary output is in SU(2) for 1e6 random inputs") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(-4.0 * kPi, 4.0 * kPi);
  double worst_unitary = 0.0;
  double worst_det = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    const Unitary2 u = rotation_unitary(oracle::random_axis(rng), angle(rng));
    worst_unitary = std::max(worst_unitary, unitarity_deviation(u));
    worst_det = std::max(worst_det, std::abs(u.det() - 1.0));
  }
  CHECK(worst_unitary < 1e-12);
  CHECK(worst_det < 1e-12);
}

TEST_CASE("compose puts the first operand first in time") {
  const Unitary2 u = rotation_unitary(Axis3(0.0, 0.6, 0.8), 1.3);
  CHECK(max_abs_diff(compose(Unitary2::identity(), u), u) == 0.0);
  CHECK(
      max_abs_diff(compose(x_rotation(0.4), x_rotation(0.9)), x_rotation(1.3)) <
      1e-15);
  CHECK(
      max_abs_diff(
          compose(x_rotation(kPi), x_rotation(kPi)),
          Complex{-1.0} * Unitary2::identity()) < 1e-15);
  // Non-commuting pair: compose(a, b) == b * a.
  const Unitary2 a = x_rotation(0.7);
  const Unitary2 b = z_rotation(1.1);
  CHECK(max_abs_diff(compose(a, b), b * a) == 0.0);
  CHECK(max_abs_diff(compose(a, b), a * b) > 1e-3);
}

TEST_CASE("compose is associative") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::from_eigen(oracle::random_unitary(rng));
    const auto b = oracle::from_eigen(oracle::random_unitary(rng));
    const auto c = oracle::from_eigen(oracle::random_unitary(rng));
    REQUIRE(
        max_abs_diff(compose(compose(a, b), c), compose(a, compose(b, c))) <
        1e-14);
  }
}

SCENARIO("hs_fidelity examples") {
  const Unitary2 u = rotation_unitary(Axis3(0.0, 0.6, 0.8), 2.1);
  CHECK_THAT(hs_fidelity(u, u), WithinAbs(1.0, 1e-15));
  CHECK_THAT(
      hs_fidelity(Unitary2::identity(), x_rotation(kPi)),
      WithinAbs(0.0, 1e-15));
  CHECK_THAT(
      hs_fidelity(Unitary2::identity(), Complex{-1.0} * Unitary2::identity()),
      WithinAbs(1.0, 1e-15));
  GIVEN("coaxial rotations") {
    const double target = 2.3;
    const double current = 0.4;
    CHECK_THAT(
        hs_fidelity(x_rotation(target), x_rotation(current)),
        WithinAbs(std::pow(std::cos((target - current) / 2.0), 2), 1e-14));
  }
}

TEST_CASE("hs_fidelity symmetries") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int i = 0; i < 1000; ++i) {
    const auto u = oracle::from_eigen(oracle::random_unitary(rng));
    const auto v = oracle::from_eigen(oracle::random_unitary(rng));
    const auto w = oracle::from_eigen(oracle::random_unitary(rng));
    const double f = hs_fidelity(u, v);
    REQUIRE(f >= 0.0);
    REQUIRE(f <= 1.0);
    REQUIRE_THAT(hs_fidelity(v, u), WithinAbs(f, 1e-12));
    REQUIRE_THAT(
        hs_fidelity(std::polar(1.0, phase(rng)) * u, v), WithinAbs(f, 1e-12));
    REQUIRE_THAT(hs_fidelity(w * u, w * v), WithinAbs(f, 1e-12));
    REQUIRE_THAT(
        f,
        WithinAbs(
            oracle::fidelity(oracle::to_eigen(u), oracle::to_eigen(v)),
            1e-12));
  }
}

SCENARIO("residual_angle inverts the coaxial fidelity") {
  CHECK(residual_angle(1.0) == 0.0);
  CHECK_THAT(residual_angle(0.0), WithinAbs(kPi, 1e-15));
  CHECK_THAT(residual_angle(0.5), WithinAbs(kPi / 2.0, 1e-15));
  GIVEN("roundoff just outside [0, 1]") {
    CHECK(residual_angle(1.0 + 5e-10) == 0.0);
    CHECK_THAT(residual_angle(-5e-10), WithinAbs(kPi, 1e-15));
  }
  GIVEN("values well outside [0, 1]") {
    CHECK_THROWS_AS(residual_angle(1.0 + 1e-6), DomainError);
    CHECK_THROWS_AS(residual_angle(-0.1), DomainError);
    CHECK_THROWS_AS(residual_angle(std::nan("")), DomainError);
  }
}

TEST_CASE("residual_angle recovers folded coaxial angle differences") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int i = 0; i < 10000; ++i) {
    const Axis3 n = oracle::random_axis(rng);
    const double target = angle(rng);
    const double current = angle(rng);
    const double diff = std::fmod(std::abs(target - current), kTwoPi);
    const double folded = std::min(diff, kTwoPi - diff);
    const double got = residual_angle(hs_fidelity(
        rotation_unitary(n, target), rotation_unitary(n, current)));
    // acos is ill-conditioned at F = 1, so compare there through the
    // fidelity instead of the angle.
    if (folded > 1e-4) {
      REQUIRE_THAT(got, WithinAbs(folded, 1e-9));
    } else {
      REQUIRE_THAT(got, WithinAbs(folded, 1e-7));
    }
  }
}

SCENARIO("euler_zxz examples") {
  GIVEN("the identity") {
    const EulerZXZ e = euler_zxz(Unitary2::identity());
    CHECK(e.theta == 0.0);
    CHECK(e.phi == 0.0);
    CHECK(e.lam == 0.0);
    CHECK(e.gamma == 0.0);
  }
  GIVEN("the Euler matrix with zero z-angles") {
    const double theta = 1.234;
    const EulerZXZ e = euler_zxz(euler_matrix(theta, 0.0, 0.0));
    CHECK_THAT(e.theta, WithinAbs(theta, 1e-12));
    CHECK_THAT(e.phi, WithinAbs(0.0, 1e-12));
    CHECK_THAT(e.lam, WithinAbs(0.0, 1e-12));
    CHECK_THAT(e.gamma, WithinAbs(0.0, 1e-12));
  }
  GIVEN("Hadamard") {
    // Solving [[c, -e^{il}s], [e^{ip}s, e^{i(l+p)}c]] = H entrywise:
    // c = s = 1/sqrt2 -> theta = pi/2; e^{ip} = 1 -> phi = 0;
    // -e^{il} = 1 -> lam = pi; e^{i(l+p)} = -1 agrees.
    const EulerZXZ e = euler_zxz(hadamard());
    CHECK_THAT(e.theta, WithinAbs(kPi / 2.0, 1e-12));
    CHECK_THAT(e.phi, WithinAbs(0.0, 1e-12));
    CHECK_THAT(e.lam, WithinAbs(kPi, 1e-12));
    CHECK_THAT(e.gamma, WithinAbs(0.0, 1e-12));
    CHECK(max_abs_diff(euler_matrix(e), hadamard()) < 1e-12);
  }
  GIVEN("degenerate theta = pi") {
    const Unitary2 u = Complex{0.0, 1.0} * Unitary2{0.0, -1.0, 1.0, 0.0};
    const EulerZXZ e = euler_zxz(u);
    CHECK_THAT(e.theta, WithinAbs(kPi, 1e-15));
    CHECK(e.lam == 0.0);
    CHECK(
        max_abs_diff(std::polar(1.0, e.gamma) * euler_matrix(e), u) < 1e-12);
  }
  GIVEN("a non-unitary matrix") {
    CHECK_THROWS_AS(euler_zxz(Unitary2{1.0, 0.0, 0.0, 2.0}), InvalidUnitary);
  }
}

TEST_CASE("euler_zxz round-trips random unitaries") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 100000; ++i) {
    const auto u = oracle::from_eigen(oracle::random_unitary(rng));
    const EulerZXZ e = euler_zxz(u);
    REQUIRE(e.theta >= 0.0);
    REQUIRE(e.theta <= kPi);
    REQUIRE(e.phi >= 0.0);
    REQUIRE(e.phi < kTwoPi);
    REQUIRE(e.lam >= 0.0);
    REQUIRE(e.lam < kTwoPi);
    REQUIRE(e.gamma >= 0.0);
    REQUIRE(e.gamma < kTwoPi);
    REQUIRE(
        max_abs_diff(std::polar(1.0, e.gamma) * euler_matrix(e), u) < 1e-10);
  }
}

TEST_CASE("euler_zxz handles diagonal and anti-diagonal phases") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int i = 0; i < 1000; ++i) {
    const Unitary2 diag{
        std::polar(1.0, phase(rng)), 0.0, 0.0, std::polar(1.0, phase(rng))};
    const Unitary2 anti{
        0.0, std::polar(1.0, phase(rng)), std::polar(1.0, phase(rng)), 0.0};
    for (const Unitary2 &u : {diag, anti}) {
      const EulerZXZ e = euler_zxz(u);
      REQUIRE(e.lam == 0.0);
      REQUIRE(
          max_abs_diff(std::polar(1.0, e.gamma) * euler_matrix(e), u) <
          1e-12);
    }
  }
}

TEST_CASE("angle wrapping") {
  CHECK(wrap_two_pi(0.0) == 0.0);
  CHECK(wrap_two_pi(kTwoPi) == 0.0);
  CHECK_THAT(wrap_two_pi(-0.5), WithinAbs(kTwoPi - 0.5, 1e-15));
  CHECK(wrap_two_pi(-1e-300) < kTwoPi);
  CHECK(wrap_pi(kPi) == kPi);
  CHECK_THAT(wrap_pi(-kPi), WithinAbs(kPi, 1e-15));
  CHECK(wrap_pi(-0.3) == -0.3);
  CHECK_THAT(wrap_pi(3.0 * kPi / 2.0), WithinAbs(-kPi / 2.0, 1e-15));
}

}  // namespace
}  // namespace selfnav
