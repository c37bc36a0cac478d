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

#include "relparam/povm.hpp"

#include "relparam/errors.hpp"
#include "relparam/spin_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <map>

namespace relparam {

namespace {

constexpr double kEigenvalueTolerance = 1e-8;

// Projector onto the eigenspace of `casimir` with eigenvalue J(J+1), built
// as a Lagrange polynomial over the eigenvalues present in the space.
ComplexMatrix lagrange_projector(ComplexMatrix const &casimir, int twice_target,
                                 std::span<int const> twice_present)
{
  auto const jj = [](int twice) {
    double const v = 0.5 * twice;
    return v * (v + 1.0);
  };
  Eigen::Index const n   = casimir.rows();
  ComplexMatrix      out = ComplexMatrix::Identity(n, n);
  for (int t : twice_present)
  {
    if (t == twice_target)
    {
      continue;
    }
    out = out * (casimir - jj(t) * ComplexMatrix::Identity(n, n)) / (jj(twice_target) - jj(t));
  }
  return out;
}

int twice_j_from_casimir(double lambda)
{
  double const root  = std::sqrt(std::max(0.0, 1.0 + 4.0 * lambda)) - 1.0;
  int const    twice = static_cast<int>(std::lround(root));
  double const v     = 0.5 * twice;
  if (twice < 0 || std::abs(lambda - v * (v + 1.0)) > kEigenvalueTolerance)
  {
    throw NumericalError("eigenvalue " + std::to_string(lambda) +
                         " does not match any J(J+1) within 1e-8");
  }
  return twice;
}

struct EigenGroup
{
  int           twice_j;
  ComplexMatrix basis;  // orthonormal columns
};

std::vector<EigenGroup> group_by_casimir(ComplexMatrix const &casimir)
{
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(casimir);
  if (eig.info() != Eigen::Success)
  {
    throw NumericalError("eigen-decomposition failed in the spectral oracle");
  }
  std::map<int, std::vector<Eigen::Index>> columns;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k)
  {
    columns[twice_j_from_casimir(eig.eigenvalues()(k))].push_back(k);
  }
  std::vector<EigenGroup> groups;
  for (auto const &[twice, cols] : columns)
  {
    ComplexMatrix basis(casimir.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
    {
      basis.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(cols[c]);
    }
    groups.push_back({twice, std::move(basis)});
  }
  return groups;
}

std::array<HalfInteger, 3> three_spin_space(HalfInteger j)
{
  return {half(), half(), j};
}

}  // namespace

ComplexMatrix const &ProjectorSet::at(std::string_view label) const
{
  return projectors[index_of(label)];
}

std::size_t ProjectorSet::index_of(std::string_view label) const
{
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
  {
    throw InvalidArgument("unknown projector label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

std::vector<int> ProjectorSet::traces() const
{
  std::vector<int> out;
  out.reserve(projectors.size());
  for (auto const &p : projectors)
  {
    out.push_back(static_cast<int>(std::lround(p.trace().real())));
  }
  return out;
}

double ProjectorResiduals::worst() const noexcept
{
  return std::max({completeness, orthogonality, idempotence, hermiticity, trace_rounding});
}

ProjectorResiduals projector_residuals(ProjectorSet const &set)
{
  ProjectorResiduals r;
  if (set.projectors.empty())
  {
    return r;
  }
  Eigen::Index const n   = set.dim();
  ComplexMatrix      sum = ComplexMatrix::Zero(n, n);
  for (std::size_t a = 0; a < set.size(); ++a)
  {
    auto const &pa = set.projectors[a];
    sum += pa;
    r.idempotence = std::max(r.idempotence, max_abs(pa * pa - pa));
    r.hermiticity = std::max(r.hermiticity, max_abs(pa - pa.adjoint()));
    double const tr = pa.trace().real();
    r.trace_rounding = std::max(r.trace_rounding, std::abs(tr - std::round(tr)));
    for (std::size_t b = a + 1; b < set.size(); ++b)
    {
      r.orthogonality = std::max(r.orthogonality, max_abs(pa * set.projectors[b]));
    }
  }
  r.completeness = max_abs(sum - ComplexMatrix::Identity(n, n));
  return r;
}

std::string_view to_string(Coupling c) noexcept
{
  return c == Coupling::QubitSpin ? "qubit-spin" : "qubit-pair";
}

Coupling parse_coupling(std::string_view text)
{
  if (text == "qubit-spin")
  {
    return Coupling::QubitSpin;
  }
  if (text == "qubit-pair")
  {
    return Coupling::QubitPair;
  }
  throw InvalidArgument("unknown coupling '" + std::string(text) +
                        "' (expected qubit-spin or qubit-pair)");
}

std::pair<std::size_t, std::size_t> intermediate_pair(Coupling c) noexcept
{
  return c == Coupling::QubitSpin ? std::pair<std::size_t, std::size_t>{0, 2}
                                  : std::pair<std::size_t, std::size_t>{0, 1};
}

ComplexMatrix singlet_projector()
{
  StateVector psi = StateVector::Zero(4);
  psi(1)          = 1.0 / std::sqrt(2.0);
  psi(2)          = -1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

std::array<ComplexMatrix, 4> three_qubit_operator_basis()
{
  auto const                 s = pauli();
  std::array<HalfInteger, 3> q{half(), half(), half()};
  auto const dot = [&](std::size_t a, std::size_t b) {
    return ComplexMatrix(embed(s.x, a, q) * embed(s.x, b, q) + embed(s.y, a, q) * embed(s.y, b, q) +
                         embed(s.z, a, q) * embed(s.z, b, q));
  };
  return {ComplexMatrix::Identity(8, 8), dot(0, 1), dot(1, 2), dot(0, 2)};
}

ProjectorSet three_qubit_projectors()
{
  auto const [id, s12, s23, s13] = three_qubit_operator_basis();
  ComplexMatrix const primed     = 0.25 * (id - s12);
  ComplexMatrix const quartet    = 0.5 * id + (s12 + s23 + s13) / 6.0;
  ComplexMatrix const doublet    = id - quartet - primed;
  return {{"1/2'", "1/2", "3/2"}, {primed, doublet, quartet}};
}

ProjectorSet coupled_projectors(HalfInteger j, Coupling coupling)
{
  if (j.twice() < 1)
  {
    throw InvalidArgument("coupled_projectors needs j >= 1/2");
  }
  auto const         spins = three_spin_space(j);
  Eigen::Index const n     = product_dimension(spins);
  ComplexMatrix const id   = ComplexMatrix::Identity(n, n);
  ComplexMatrix const casimir = total_spin_operators(spins).casimir();

  std::vector<int> present{j.twice(), j.twice() + 2};
  bool const       has_lower = j.twice() >= 2;
  if (has_lower)
  {
    present.insert(present.begin(), j.twice() - 2);
  }

  ComplexMatrix lower_branch;
  if (coupling == Coupling::QubitPair)
  {
    // |psi-><psi-| (x) I = 1/4 - S1.S2
    lower_branch = 0.25 * id - spin_dot(spins, 0, 1);
  }
  else
  {
    // (j - sigma.J) / (2j + 1) on qubit 1 and the spin-j factor.
    lower_branch = (j.value() * id - 2.0 * spin_dot(spins, 0, 2)) / (j.twice() + 1.0);
  }
  ComplexMatrix const upper_branch = id - lower_branch;

  ComplexMatrix const mid = lagrange_projector(casimir, j.twice(), present);
  ComplexMatrix const top = lagrange_projector(casimir, j.twice() + 2, present);
  ComplexMatrix const low =
      has_lower ? lagrange_projector(casimir, j.twice() - 2, present) : ComplexMatrix::Zero(n, n);

  // A qubit singlet leaves only J = j, so J = j-1 then sits in the triplet.
  ComplexMatrix const &below = coupling == Coupling::QubitPair ? upper_branch : lower_branch;
  return {{"j'", "j-1", "j", "j+1"},
          {lower_branch * mid, below * low, upper_branch * mid, upper_branch * top}};
}

ProjectorSet pair_projectors(HalfInteger j)
{
  if (j.twice() < 1)
  {
    throw InvalidArgument("pair_projectors needs j >= 1/2");
  }
  std::array<HalfInteger, 2> spins{half(), j};
  Eigen::Index const         n  = product_dimension(spins);
  ComplexMatrix const        id = ComplexMatrix::Identity(n, n);
  ComplexMatrix const lower = (j.value() * id - 2.0 * spin_dot(spins, 0, 1)) / (j.twice() + 1.0);
  return {{"j-1/2", "j+1/2"}, {lower, id - lower}};
}

LinearSystemSolution solve_projector_system()
{
  std::array<HalfInteger, 3> q{half(), half(), half()};
  ComplexMatrix const id      = ComplexMatrix::Identity(8, 8);
  ComplexMatrix const primed  = kron(singlet_projector(), ComplexMatrix(ComplexMatrix::Identity(2, 2)));
  ComplexMatrix const casimir = total_spin_operators(q).casimir();

  // Unknowns (Pi_{1/2}, Pi_{3/2}):
  //   Pi_{1/2} + Pi_{3/2}                 = I - Pi_{1/2'}
  //   3/4 Pi_{1/2} + 15/4 Pi_{3/2}        = J.J - 3/4 Pi_{1/2'}
  Eigen::Matrix2d system;
  system << 1.0, 1.0, 0.75, 3.75;
  Eigen::FullPivLU<Eigen::Matrix2d> lu(system);
  if (!lu.isInvertible() || std::abs(system.determinant()) < 1e-12)
  {
    throw NumericalError("projector linear system is singular");
  }
  Eigen::Matrix2d const inv = lu.inverse();
  ComplexMatrix const   rhs0 = id - primed;
  ComplexMatrix const   rhs1 = casimir - 0.75 * primed;

  LinearSystemSolution out;
  ComplexMatrix const doublet = inv(0, 0) * rhs0 + inv(0, 1) * rhs1;
  ComplexMatrix const quartet = inv(1, 0) * rhs0 + inv(1, 1) * rhs1;
  out.projectors = {{"1/2'", "1/2", "3/2"}, {primed, doublet, quartet}};

  auto const basis = three_qubit_operator_basis();
  for (std::size_t p = 0; p < 3; ++p)
  {
    ComplexMatrix const &proj  = out.projectors.projectors[p];
    ComplexMatrix        recon = ComplexMatrix::Zero(8, 8);
    for (std::size_t k = 0; k < 4; ++k)
    {
      Complex const num  = (basis[k].adjoint() * proj).trace();
      Complex const norm = (basis[k].adjoint() * basis[k]).trace();
      out.coefficients[p][k] = (num / norm).real();
      recon += out.coefficients[p][k] * basis[k];
    }
    out.expansion_residual = std::max(out.expansion_residual, max_abs(proj - recon));
  }
  return out;
}

std::string SpectralBlock::label() const
{
  if (intermediate)
  {
    return "(" + intermediate->to_string() + ")" + total.to_string();
  }
  return total.to_string();
}

std::vector<SpectralBlock> spectral_total_spin_projectors(std::span<HalfInteger const> spins,
                                                          std::pair<std::size_t, std::size_t> intermediate)
{
  if (spins.size() != 2 && spins.size() != 3)
  {
    throw InvalidArgument("spectral oracle supports two or three spins");
  }
  ComplexMatrix const casimir = total_spin_operators(spins).casimir();
  std::vector<SpectralBlock> out;

  if (spins.size() == 2)
  {
    for (auto const &g : group_by_casimir(casimir))
    {
      out.push_back({std::nullopt, HalfInteger::from_twice(g.twice_j), g.basis * g.basis.adjoint()});
    }
    return out;
  }

  auto const [a, b] = intermediate;
  if (spins[0].twice() != 1 || spins[1].twice() != 1)
  {
    throw InvalidArgument("three-spin oracle expects the first two spins to be 1/2");
  }
  if (a != 0 || (b != 1 && b != 2))
  {
    throw InvalidArgument("intermediate pair must be (0, 1) or (0, 2)");
  }
  std::array<std::size_t, 2> const pair{a, b};
  ComplexMatrix const pair_casimir = total_spin_operators(spins, pair).casimir();

  for (auto const &outer : group_by_casimir(pair_casimir))
  {
    ComplexMatrix const restricted = outer.basis.adjoint() * casimir * outer.basis;
    for (auto const &inner : group_by_casimir(restricted))
    {
      ComplexMatrix const vecs = outer.basis * inner.basis;
      out.push_back({HalfInteger::from_twice(outer.twice_j), HalfInteger::from_twice(inner.twice_j),
                     vecs * vecs.adjoint()});
    }
  }
  return out;
}

ProjectorSet spectral_coupled_projectors(HalfInteger j, Coupling coupling)
{
  auto const spins  = three_spin_space(j);
  auto const blocks = spectral_total_spin_projectors(spins, intermediate_pair(coupling));
  int const  n      = product_dimension(spins);
  int const  lower_intermediate = coupling == Coupling::QubitPair ? 0 : j.twice() - 1;

  ProjectorSet out{{"j'", "j-1", "j", "j+1"}, std::vector<ComplexMatrix>(4, ComplexMatrix::Zero(n, n))};
  for (auto const &blk : blocks)
  {
    int const t = blk.total.twice();
    std::size_t slot;
    if (t == j.twice())
    {
      slot = blk.intermediate->twice() == lower_intermediate ? 0 : 2;
    }
    else if (t == j.twice() - 2)
    {
      slot = 1;
    }
    else if (t == j.twice() + 2)
    {
      slot = 3;
    }
    else
    {
      throw NumericalError("unexpected total spin " + blk.total.to_string() + " in oracle");
    }
    out.projectors[slot] += blk.projector;
  }
  return out;
}

ProjectorSet spectral_pair_projectors(HalfInteger j)
{
  std::array<HalfInteger, 2> spins{half(), j};
  auto const                 blocks = spectral_total_spin_projectors(spins);
  int const                  n      = product_dimension(spins);
  ProjectorSet out{{"j-1/2", "j+1/2"}, std::vector<ComplexMatrix>(2, ComplexMatrix::Zero(n, n))};
  for (auto const &blk : blocks)
  {
    out.projectors[blk.total.twice() < j.twice() ? 0 : 1] += blk.projector;
  }
  return out;
}

double max_projector_deviation(ProjectorSet const &a, ProjectorSet const &b)
{
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
  {
    worst = std::max(worst, max_abs_deviation(a.projectors[k], b.at(a.labels[k])));
  }
  return worst;
}

}  // namespace relparam
