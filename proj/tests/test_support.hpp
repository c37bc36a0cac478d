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

// Helpers shared by the unit tests. Everything here is built from first
// principles so it can serve as an oracle for the library.

#include "relparam/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace testing_support {

using relparam::ComplexMatrix;
using relparam::Direction;
using relparam::StateVector;
using cplx = std::complex<double>;

inline Direction random_direction(std::mt19937_64 &g)
{
  std::normal_distribution<double> n;
  Eigen::Vector3d                  v(n(g), n(g), n(g));
  return Direction::from_vector(v);
}

/// Spin matrices from the ladder-operator matrix elements, |j, m> with m
/// descending; twice_j = 2j.
struct Spin
{
  ComplexMatrix x, y, z;
};

inline Spin spin(int twice_j)
{
  int const    d = twice_j + 1;
  double const j = 0.5 * twice_j;
  Spin         s{ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d)};
  ComplexMatrix plus = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
  {
    double const m = j - k;
    s.z(k, k)      = m;
    if (k > 0)
    {
      // J+ |j, m> = sqrt(j(j+1) - m(m+1)) |j, m+1>
      plus(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
  }
  ComplexMatrix const minus = plus.adjoint();
  s.x                       = 0.5 * (plus + minus);
  s.y                       = cplx(0, -0.5) * (plus - minus);
  return s;
}

/// Coherent state by rotating |j, j>: exp(-i phi Jz) exp(-i theta Jy).
inline StateVector rotated_highest_weight(int twice_j, Direction const &n)
{
  Spin const    s = spin(twice_j);
  ComplexMatrix a = cplx(0, -n.polar()) * s.y;
  ComplexMatrix b = cplx(0, -n.azimuth()) * s.z;
  StateVector   top = StateVector::Zero(twice_j + 1);
  top(0)            = 1.0;
  return b.exp() * (a.exp() * top);
}

inline ComplexMatrix kron(ComplexMatrix const &a, ComplexMatrix const &b)
{
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
  {
    for (Eigen::Index k = 0; k < a.cols(); ++k)
    {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

inline StateVector kron(StateVector const &a, StateVector const &b)
{
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
  {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

inline ComplexMatrix identity(Eigen::Index n)
{
  return ComplexMatrix::Identity(n, n);
}

/// Projector onto the eigenspace of a Hermitian matrix with eigenvalue near
/// `value`.
inline ComplexMatrix eigenprojector(ComplexMatrix const &h, double value, double tol = 1e-6)
{
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexMatrix p = ComplexMatrix::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
  {
    if (std::abs(es.eigenvalues()(i) - value) < tol)
    {
      p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    }
  }
  return p;
}

inline double expectation(ComplexMatrix const &op, StateVector const &psi)
{
  return psi.dot(op * psi).real();
}

inline double max_abs(ComplexMatrix const &m)
{
  return m.cwiseAbs().maxCoeff();
}

}  // namespace testing_support
