//------------------------------------------------------------------------------
//
//   Copyright 2026 The relparam Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>

namespace relparam {

using Complex       = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector   = Eigen::VectorXcd;
using Vector3       = Eigen::Vector3d;

/// Unit vector in R^3. Construction normalizes; the stored vector has norm 1
/// to within rounding.
class Direction
{
public:
  Direction() = default;

  /// Throws InvalidArgument for zero or non-finite vectors.
  static Direction from_vector(Vector3 const &v);
  static Direction from_angles(double polar, double azimuth);
  static Direction x_axis() { return from_vector({1.0, 0.0, 0.0}); }
  static Direction y_axis() { return from_vector({0.0, 1.0, 0.0}); }
  static Direction z_axis() { return from_vector({0.0, 0.0, 1.0}); }

  Vector3 const &vec() const noexcept { return v_; }
  double         x() const noexcept { return v_.x(); }
  double         y() const noexcept { return v_.y(); }
  double         z() const noexcept { return v_.z(); }
  double         polar() const;
  /// Azimuth in (-pi, pi]; 0 on the z axis.
  double azimuth() const;

  double dot(Direction const &other) const noexcept { return v_.dot(other.v_); }

  /// Rodrigues rotation by `angle` (right-handed) about `axis`.
  Direction rotated(Direction const &axis, double angle) const;

  Direction operator-() const;

private:
  Vector3 v_{0.0, 0.0, 1.0};
};

/// Largest absolute entry.
double max_abs(ComplexMatrix const &m);
double max_abs_deviation(ComplexMatrix const &a, ComplexMatrix const &b);
bool   is_hermitian(ComplexMatrix const &m, double tol = 1e-12);
double unitarity_defect(ComplexMatrix const &u);

/// Kronecker product in left-to-right order. Throws InvalidArgument when
/// `factors` is empty.
ComplexMatrix tensor(std::span<ComplexMatrix const> factors);
StateVector   tensor(std::span<StateVector const> factors);
ComplexMatrix kron(ComplexMatrix const &a, ComplexMatrix const &b);
StateVector   kron(StateVector const &a, StateVector const &b);

/// <psi| op |psi>, real part.
double expectation(ComplexMatrix const &op, StateVector const &psi);

}  // namespace relparam
