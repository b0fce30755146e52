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

#include <array>
#include <complex>
#include <numbers>

namespace selfnav {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/**
 * A 2x2 complex matrix, stored row-major as
 *
 *   [[a, b],
 *    [c, d]]
 *
 * Every value produced by this library is unitary; the type itself does not
 * enforce it so that user-supplied matrices can be checked with is_unitary.
 */
struct Unitary2 {
  Complex a{1.0};
  Complex b{0.0};
  Complex c{0.0};
  Complex d{1.0};

  static Unitary2 identity() { return {}; }

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  Unitary2 adjoint() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  std::array<Complex, 4> entries() const { return {a, b, c, d}; }

  friend Unitary2 operator*(const Unitary2 &lhs, const Unitary2 &rhs) {
    return {
        lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
        lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
  }
  friend Unitary2 operator*(Complex scale, const Unitary2 &u) {
    return {scale * u.a, scale * u.b, scale * u.c, scale * u.d};
  }
  friend bool operator==(const Unitary2 &, const Unitary2 &) = default;
};

/** Largest entrywise deviation of U^dagger U from the identity. */
double unitarity_deviation(const Unitary2 &u);

bool is_unitary(const Unitary2 &u, double tol = 1e-9);

/** Largest entrywise absolute difference. */
double max_abs_diff(const Unitary2 &u, const Unitary2 &v);

/** Unit vector on the Bloch sphere. Construction validates the norm. */
class Axis3 {
 public:
  /** Throws InvalidAxis when the norm deviates from 1 by more than 1e-9. */
  Axis3(double nx, double ny, double nz);

  static Axis3 x() { return {1.0, 0.0, 0.0}; }
  static Axis3 y() { return {0.0, 1.0, 0.0}; }
  static Axis3 z() { return {0.0, 0.0, 1.0}; }
  /** Axis in the XY-plane at drive phase `phase`: (cos phase, sin phase, 0). */
  static Axis3 xy(double phase);

  double nx() const { return nx_; }
  double ny() const { return ny_; }
  double nz() const { return nz_; }

  friend bool operator==(const Axis3 &, const Axis3 &) = default;

 private:
  double nx_;
  double ny_;
  double nz_;
};

/**
 * Euler angles of the form
 *
 *   e^{i gamma} [[cos(t/2),             -e^{i lam} sin(t/2)],
 *                [e^{i phi} sin(t/2),   e^{i(lam+phi)} cos(t/2)]]
 *
 * with theta in [0, pi] and phi, lam, gamma in [0, 2pi).
 */
struct EulerZXZ {
  double theta = 0.0;
  double phi = 0.0;
  double lam = 0.0;
  double gamma = 0.0;
};

/** cos(theta/2) I - i sin(theta/2) (n . sigma). Always in SU(2). */
Unitary2 rotation_unitary(const Axis3 &axis, double theta);

Unitary2 x_rotation(double theta);
Unitary2 y_rotation(double theta);
/** Z_alpha = rotation_unitary(+z, alpha) = diag(e^{-i alpha/2}, e^{i alpha/2}). */
Unitary2 z_rotation(double alpha);

/** `first` acts first in time, so the result is second * first. */
Unitary2 compose(const Unitary2 &first, const Unitary2 &second);

/** |Tr(u^dagger v) / 2|^2, clamped into [0, 1]. */
double hs_fidelity(const Unitary2 &u, const Unitary2 &v);

/**
 * Minimal coaxial angle 2 arccos(sqrt(f)) that closes a fidelity gap.
 * Values within 1e-9 of [0, 1] are clamped; anything further out throws
 * DomainError.
 */
double residual_angle(double f);

/** Throws InvalidUnitary when `u` deviates from unitarity by more than 1e-9. */
EulerZXZ euler_zxz(const Unitary2 &u);

/** The matrix of the EulerZXZ form without the global phase. */
Unitary2 euler_matrix(double theta, double phi, double lam);
Unitary2 euler_matrix(const EulerZXZ &angles);

/** Folds into [0, 2pi). */
double wrap_two_pi(double angle);
/** Folds into (-pi, pi]. */
double wrap_pi(double angle);

}  // namespace selfnav
