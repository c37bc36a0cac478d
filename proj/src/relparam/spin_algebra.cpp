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

#include "relparam/spin_algebra.hpp"

#include "relparam/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace relparam {

namespace {

constexpr Complex kI{0.0, 1.0};

double log_factorial(int n)
{
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace

ComplexMatrix SpinOperators::casimir() const
{
  return x * x + y * y + z * z;
}

ComplexMatrix SpinOperators::along(Direction const &n) const
{
  return n.x() * x + n.y() * y + n.z() * z;
}

SpinOperators spin_operators(HalfInteger j)
{
  int const  dim = j.dimension();
  double const jv = j.value();

  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix jz    = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k)
  {
    double const m = jv - k;
    jz(k, k)       = m;
    // J+ |j, m> = sqrt(j(j+1) - m(m+1)) |j, m+1>; |j, m+1> sits at index k-1.
    if (k > 0)
    {
      raise(k - 1, k) = std::sqrt(jv * (jv + 1.0) - m * (m + 1.0));
    }
  }
  ComplexMatrix const lower = raise.adjoint();
  return {(raise + lower) / 2.0, (raise - lower) / (2.0 * kI), jz};
}

SpinOperators pauli()
{
  auto s = spin_operators(half());
  return {2.0 * s.x, 2.0 * s.y, 2.0 * s.z};
}

StateVector basis_state(HalfInteger j, int twice_m)
{
  if (std::abs(twice_m) > j.twice() || (j.twice() - twice_m) % 2 != 0)
  {
    throw InvalidArgument("invalid projection 2m = " + std::to_string(twice_m) + " for j = " +
                          j.to_string());
  }
  StateVector v = StateVector::Zero(j.dimension());
  v((j.twice() - twice_m) / 2) = 1.0;
  return v;
}

StateVector coherent_state(HalfInteger j, Direction const &dir)
{
  int const    n     = j.twice();
  double const theta = dir.polar();
  double const phi   = dir.azimuth();
  double const c     = std::cos(theta / 2.0);
  double const s     = std::sin(theta / 2.0);

  // Amplitude on |j, j-k>: sqrt(C(2j, k)) cos^(2j-k) sin^k e^{i k phi}.
  StateVector out(n + 1);
  double const lbin_n = log_factorial(n);
  for (int k = 0; k <= n; ++k)
  {
    double const lbin = 0.5 * (lbin_n - log_factorial(k) - log_factorial(n - k));
    double       mag  = 0.0;
    bool const   zero = (c == 0.0 && n - k > 0) || (s == 0.0 && k > 0);
    if (!zero)
    {
      double const lc = n - k > 0 ? (n - k) * std::log(c) : 0.0;
      double const ls = k > 0 ? k * std::log(s) : 0.0;
      mag             = std::exp(lbin + lc + ls);
    }
    out(k) = std::polar(mag, k * phi);
  }
  if (dir.x() == 0.0 && dir.y() == 0.0 && dir.z() < 0.0)
  {
    // -z: only |j, -j> survives; pin its phase.
    out.setZero();
    out(n) = 1.0;
  }
  return out;
}

StateVector qubit_state(Direction const &dir)
{
  return coherent_state(half(), dir);
}

double clebsch_gordan(HalfInteger j1, int twice_m1, HalfInteger j2, int twice_m2, HalfInteger J,
                      int twice_M)
{
  int const a = j1.twice();
  int const b = j2.twice();
  int const c = J.twice();
  if (twice_m1 + twice_m2 != twice_M)
  {
    return 0.0;
  }
  if (std::abs(twice_m1) > a || std::abs(twice_m2) > b || std::abs(twice_M) > c)
  {
    return 0.0;
  }
  if ((a + twice_m1) % 2 != 0 || (b + twice_m2) % 2 != 0 || (c + twice_M) % 2 != 0)
  {
    return 0.0;
  }
  if ((a + b + c) % 2 != 0 || c < std::abs(a - b) || c > a + b)
  {
    return 0.0;
  }

  // Racah's single-sum formula, every argument an integer.
  int const j1pj2mJ = (a + b - c) / 2;
  int const j1mj2pJ = (a - b + c) / 2;
  int const mj1pj2pJ = (-a + b + c) / 2;
  int const sum1     = (a + b + c) / 2 + 1;
  int const j1pm1    = (a + twice_m1) / 2;
  int const j1mm1    = (a - twice_m1) / 2;
  int const j2pm2    = (b + twice_m2) / 2;
  int const j2mm2    = (b - twice_m2) / 2;
  int const JpM      = (c + twice_M) / 2;
  int const JmM      = (c - twice_M) / 2;
  int const Jmj2pm1  = (c - b + twice_m1) / 2;
  int const Jmj1mm2  = (c - a - twice_m2) / 2;

  double const log_prefactor =
      0.5 * (std::log(static_cast<double>(c + 1)) + log_factorial(j1pj2mJ) +
             log_factorial(j1mj2pJ) + log_factorial(mj1pj2pJ) - log_factorial(sum1) +
             log_factorial(j1pm1) + log_factorial(j1mm1) + log_factorial(j2pm2) +
             log_factorial(j2mm2) + log_factorial(JpM) + log_factorial(JmM));

  int const kmin = std::max({0, -Jmj2pm1, -Jmj1mm2});
  int const kmax = std::min({j1pj2mJ, j1mm1, j2pm2});
  if (kmin > kmax)
  {
    return 0.0;
  }

  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(kmax - kmin + 1));
  for (int k = kmin; k <= kmax; ++k)
  {
    logs.push_back(log_prefactor - log_factorial(k) - log_factorial(j1pj2mJ - k) -
                   log_factorial(j1mm1 - k) - log_factorial(j2pm2 - k) -
                   log_factorial(Jmj2pm1 + k) - log_factorial(Jmj1mm2 + k));
  }
  double const top = *std::max_element(logs.begin(), logs.end());
  long double  acc = 0.0L;
  for (int k = kmin; k <= kmax; ++k)
  {
    long double const term = std::exp(static_cast<long double>(logs[k - kmin] - top));
    acc += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(acc * std::exp(static_cast<long double>(top)));
}

ComplexMatrix rotation_operator(HalfInteger j, Direction const &axis, double angle)
{
  ComplexMatrix const generator = spin_operators(j).along(axis);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(generator);
  if (eig.info() != Eigen::Success)
  {
    throw NumericalError("eigen-decomposition of the rotation generator failed");
  }
  Eigen::VectorXcd phases(generator.rows());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
  {
    phases(k) = std::exp(-kI * angle * eig.eigenvalues()(k));
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

ComplexMatrix collective_rotation(Direction const &axis, double angle,
                                  std::span<HalfInteger const> spins)
{
  if (spins.empty())
  {
    throw InvalidArgument("collective rotation needs at least one spin");
  }
  std::vector<ComplexMatrix> factors;
  factors.reserve(spins.size());
  for (auto j : spins)
  {
    factors.push_back(rotation_operator(j, axis, angle));
  }
  return tensor(factors);
}

int product_dimension(std::span<HalfInteger const> spins)
{
  return std::accumulate(spins.begin(), spins.end(), 1,
                         [](int acc, HalfInteger j) { return acc * j.dimension(); });
}

ComplexMatrix embed(ComplexMatrix const &op, std::size_t which, std::span<HalfInteger const> spins)
{
  if (which >= spins.size() || op.rows() != spins[which].dimension())
  {
    throw InvalidArgument("operator does not match the selected factor");
  }
  int left = 1;
  for (std::size_t k = 0; k < which; ++k)
  {
    left *= spins[k].dimension();
  }
  int right = 1;
  for (std::size_t k = which + 1; k < spins.size(); ++k)
  {
    right *= spins[k].dimension();
  }
  ComplexMatrix out = kron(ComplexMatrix::Identity(left, left), op);
  return kron(out, ComplexMatrix::Identity(right, right));
}

SpinOperators total_spin_operators(std::span<HalfInteger const> spins,
                                   std::span<std::size_t const> factors)
{
  int const     dim = product_dimension(spins);
  SpinOperators total{ComplexMatrix::Zero(dim, dim), ComplexMatrix::Zero(dim, dim),
                      ComplexMatrix::Zero(dim, dim)};
  for (auto f : factors)
  {
    auto const s = spin_operators(spins[f]);
    total.x += embed(s.x, f, spins);
    total.y += embed(s.y, f, spins);
    total.z += embed(s.z, f, spins);
  }
  return total;
}

SpinOperators total_spin_operators(std::span<HalfInteger const> spins)
{
  std::vector<std::size_t> all(spins.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return total_spin_operators(spins, all);
}

ComplexMatrix spin_dot(std::span<HalfInteger const> spins, std::size_t a, std::size_t b)
{
  if (a == b)
  {
    throw InvalidArgument("spin_dot needs two distinct factors");
  }
  auto const sa = spin_operators(spins[a]);
  auto const sb = spin_operators(spins[b]);
  return embed(sa.x, a, spins) * embed(sb.x, b, spins) +
         embed(sa.y, a, spins) * embed(sb.y, b, spins) +
         embed(sa.z, a, spins) * embed(sb.z, b, spins);
}

}  // namespace relparam
