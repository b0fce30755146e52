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

#include "selfnav/su2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "selfnav/errors.hpp"

namespace selfnav {

namespace {

constexpr double kAxisNormTol = 1e-9;
constexpr double kFidelityClampTol = 1e-9;
constexpr double kUnitaryTol = 1e-9;
// Below this magnitude an off-diagonal (or diagonal) pair is treated as an
// exact zero and only one z-angle is determined.
constexpr double kEulerDegenerate = 1e-14;

}  // namespace

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double wrap_pi(double angle) {
  if (angle > -kPi && angle <= kPi) return angle;
  double r = wrap_two_pi(angle);
  if (r > kPi) r -= kTwoPi;
  return r;
}

double unitarity_deviation(const Unitary2 &u) {
  const Unitary2 p = u.adjoint() * u;
  return std::max(
      {std::abs(p.a - 1.0), std::abs(p.b), std::abs(p.c),
       std::abs(p.d - 1.0)});
}

bool is_unitary(const Unitary2 &u, double tol) {
  for (const Complex &z : u.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return unitarity_deviation(u) <= tol;
}

double max_abs_diff(const Unitary2 &u, const Unitary2 &v) {
  const auto lhs = u.entries();
  const auto rhs = v.entries();
  double m = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    m = std::max(m, std::abs(lhs[i] - rhs[i]));
  }
  return m;
}

Axis3::Axis3(double nx, double ny, double nz) : nx_(nx), ny_(ny), nz_(nz) {
  const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kAxisNormTol) {
    std::ostringstream msg;
    msg << "axis (" << nx << ", " << ny << ", " << nz
        << ") is not unit-norm (norm " << norm << ")";
    throw InvalidAxis(msg.str());
  }
}

Axis3 Axis3::xy(double phase) {
  return {std::cos(phase), std::sin(phase), 0.0};
}

Unitary2 rotation_unitary(const Axis3 &axis, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  // -i s (nx X + ny Y + nz Z)
  return {
      Complex{c, -s * axis.nz()},
      Complex{-s * axis.ny(), -s * axis.nx()},
      Complex{s * axis.ny(), -s * axis.nx()},
      Complex{c, s * axis.nz()}};
}

Unitary2 x_rotation(double theta) {
  return rotation_unitary(Axis3::x(), theta);
}
Unitary2 y_rotation(double theta) {
  return rotation_unitary(Axis3::y(), theta);
}
Unitary2 z_rotation(double alpha) {
  return rotation_unitary(Axis3::z(), alpha);
}

Unitary2 compose(const Unitary2 &first, const Unitary2 &second) {
  return second * first;
}

double hs_fidelity(const Unitary2 &u, const Unitary2 &v) {
  const Complex tr = (u.adjoint() * v).trace() * 0.5;
  return std::clamp(std::norm(tr), 0.0, 1.0);
}

double residual_angle(double f) {
  if (!(f >= -kFidelityClampTol && f <= 1.0 + kFidelityClampTol)) {
    std::ostringstream msg;
    msg << "fidelity " << f << " is outside [0, 1]";
    throw DomainError(msg.str());
  }
  const double clamped = std::clamp(f, 0.0, 1.0);
  return 2.0 * std::acos(std::sqrt(clamped));
}

Unitary2 euler_matrix(double theta, double phi, double lam) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return {
      Complex{c}, -std::polar(s, lam), std::polar(s, phi),
      std::polar(c, lam + phi)};
}

Unitary2 euler_matrix(const EulerZXZ &angles) {
  return euler_matrix(angles.theta, angles.phi, angles.lam);
}

EulerZXZ euler_zxz(const Unitary2 &u) {
  if (!is_unitary(u, kUnitaryTol)) {
    throw InvalidUnitary("euler_zxz: input matrix is not unitary");
  }
  const double cos_half = std::abs(u.a);
  const double sin_half = std::abs(u.c);

  EulerZXZ out;
  out.theta = std::clamp(2.0 * std::atan2(sin_half, cos_half), 0.0, kPi);
  if (sin_half < kEulerDegenerate) {
    // theta = 0: diag(e^{ig}, e^{i(g+phi)}); lam folded into phi.
    out.gamma = std::arg(u.a);
    out.phi = std::arg(u.d) - out.gamma;
  } else if (cos_half < kEulerDegenerate) {
    // theta = pi: [[0, -e^{i(g+lam)}], [e^{i(g+phi)}, 0]] with lam = 0.
    out.gamma = std::arg(-u.b);
    out.phi = std::arg(u.c) - out.gamma;
  } else {
    out.gamma = std::arg(u.a);
    out.phi = std::arg(u.c) - out.gamma;
    out.lam = std::arg(-u.b) - out.gamma;
  }
  out.phi = wrap_two_pi(out.phi);
  out.lam = wrap_two_pi(out.lam);
  out.gamma = wrap_two_pi(out.gamma);
  return out;
}

}  // namespace selfnav
