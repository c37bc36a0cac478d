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

#include "relparam/linalg.hpp"

#include "relparam/errors.hpp"

#include <cmath>

namespace relparam {

Direction Direction::from_vector(Vector3 const &v)
{
  double const n = v.norm();
  if (!std::isfinite(n) || n == 0.0)
  {
    throw InvalidArgument("direction must be a finite non-zero vector");
  }
  Direction d;
  d.v_ = v / n;
  return d;
}

Direction Direction::from_angles(double polar, double azimuth)
{
  return from_vector({std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
                      std::cos(polar)});
}

double Direction::polar() const
{
  return std::atan2(std::hypot(v_.x(), v_.y()), v_.z());
}

double Direction::azimuth() const
{
  if (v_.x() == 0.0 && v_.y() == 0.0)
  {
    return 0.0;
  }
  return std::atan2(v_.y(), v_.x());
}

Direction Direction::rotated(Direction const &axis, double angle) const
{
  Vector3 const &k = axis.vec();
  double const   c = std::cos(angle);
  double const   s = std::sin(angle);
  Vector3 const  r = v_ * c + k.cross(v_) * s + k * (k.dot(v_)) * (1.0 - c);
  return from_vector(r);
}

Direction Direction::operator-() const
{
  Direction d;
  d.v_ = -v_;
  return d;
}

double max_abs(ComplexMatrix const &m)
{
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_deviation(ComplexMatrix const &a, ComplexMatrix const &b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
  {
    throw InvalidArgument("matrix shapes differ");
  }
  return max_abs(a - b);
}

bool is_hermitian(ComplexMatrix const &m, double tol)
{
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

double unitarity_defect(ComplexMatrix const &u)
{
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

ComplexMatrix kron(ComplexMatrix const &a, ComplexMatrix const &b)
{
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
  {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
    {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

StateVector kron(StateVector const &a, StateVector const &b)
{
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
  {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix tensor(std::span<ComplexMatrix const> factors)
{
  if (factors.empty())
  {
    throw InvalidArgument("tensor product needs at least one factor");
  }
  ComplexMatrix out = factors.front();
  for (auto it = factors.begin() + 1; it != factors.end(); ++it)
  {
    out = kron(out, *it);
  }
  return out;
}

StateVector tensor(std::span<StateVector const> factors)
{
  if (factors.empty())
  {
    throw InvalidArgument("tensor product needs at least one factor");
  }
  StateVector out = factors.front();
  for (auto it = factors.begin() + 1; it != factors.end(); ++it)
  {
    out = kron(out, *it);
  }
  return out;
}

double expectation(ComplexMatrix const &op, StateVector const &psi)
{
  return psi.dot(op * psi).real();
}

}  // namespace relparam
