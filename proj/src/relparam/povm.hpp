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

#include "relparam/half_integer.hpp"
#include "relparam/linalg.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relparam {

/// Labeled family of orthogonal projectors that resolves the identity.
struct ProjectorSet
{
  std::vector<std::string>   labels;
  std::vector<ComplexMatrix> projectors;

  std::size_t size() const noexcept { return projectors.size(); }
  int         dim() const noexcept { return projectors.empty() ? 0 : static_cast<int>(projectors.front().rows()); }

  /// Throws InvalidArgument for unknown labels.
  ComplexMatrix const &at(std::string_view label) const;
  std::size_t          index_of(std::string_view label) const;

  /// tr(Pi_k) rounded to the nearest integer.
  std::vector<int> traces() const;
};

/// Worst-case residuals of the projector-set axioms.
struct ProjectorResiduals
{
  double completeness{0.0};   ///< max |sum Pi - I|
  double orthogonality{0.0};  ///< max |Pi_a Pi_b| over a != b
  double idempotence{0.0};    ///< max |Pi^2 - Pi|
  double hermiticity{0.0};    ///< max |Pi - Pi^dagger|
  double trace_rounding{0.0}; ///< max |tr Pi - round(tr Pi)|

  double worst() const noexcept;
};

ProjectorResiduals projector_residuals(ProjectorSet const &set);

/// Which two spins of (qubit n, qubit m, spin j) are coupled first when the
/// two total-spin-j multiplets of the three-spin space are told apart.
enum class Coupling
{
  /// First qubit with the spin-j particle: intermediate K = j -+ 1/2.
  QubitSpin,
  /// The two qubits: intermediate singlet / triplet.
  QubitPair,
};

std::string_view to_string(Coupling c) noexcept;
/// "qubit-spin" / "qubit-pair"; throws InvalidArgument otherwise.
Coupling parse_coupling(std::string_view text);

/// Factor indices (into qubit, qubit, spin-j) of the intermediate pair.
std::pair<std::size_t, std::size_t> intermediate_pair(Coupling c) noexcept;

/// Three-qubit total-spin POVM from the Pauli expansion. Labels 1/2', 1/2,
/// 3/2 where 1/2' is the qubit-1/qubit-2 singlet branch.
ProjectorSet three_qubit_projectors();

/// Four-outcome POVM on qubit (x) qubit (x) spin-j. Labels j', j-1, j, j+1.
/// j' is the J = j multiplet on the lower intermediate branch (singlet for
/// QubitPair, K = j - 1/2 for QubitSpin); for j = 1/2 the j-1 projector is the
/// zero matrix.
ProjectorSet coupled_projectors(HalfInteger j, Coupling coupling = Coupling::QubitSpin);

/// Total-spin POVM on spin-1/2 (x) spin-j. Labels j-1/2, j+1/2.
ProjectorSet pair_projectors(HalfInteger j);

/// Operator basis {I, s1.s2, s2.s3, s1.s3} on three qubits.
std::array<ComplexMatrix, 4> three_qubit_operator_basis();

struct LinearSystemSolution
{
  ProjectorSet projectors;  ///< labels 1/2', 1/2, 3/2
  /// Coefficients in three_qubit_operator_basis(), one row per label.
  std::array<std::array<double, 4>, 3> coefficients{};
  /// Largest entry of Pi - sum_k c_k B_k over the three projectors.
  double expansion_residual{0.0};
};

/// Recovers Pi_{1/2} and Pi_{3/2} from Pi_{1/2'} = |psi-><psi-| (x) I,
/// completeness, and J.J = 3/4 Pi_{1/2'} + 3/4 Pi_{1/2} + 15/4 Pi_{3/2}, with
/// J.J assembled from the spin operators. Throws NumericalError if the linear
/// system is singular.
LinearSystemSolution solve_projector_system();

/// One joint eigenspace found by the spectral oracle.
struct SpectralBlock
{
  std::optional<HalfInteger> intermediate;  ///< unset for two-spin systems
  HalfInteger                total;
  ComplexMatrix              projector;

  std::string label() const;
};

/// Diagonalizes the total J.J (and, for three spins, the intermediate pair's
/// J.J first) and returns the joint eigenspace projectors, ordered by
/// (intermediate, total). Supports two spins, or three spins whose first two
/// are spin-1/2 with the intermediate pair (0, 1) or (0, 2). Eigenvalues that
/// miss every J(J+1) by more than 1e-8 raise NumericalError.
std::vector<SpectralBlock> spectral_total_spin_projectors(
    std::span<HalfInteger const> spins,
    std::pair<std::size_t, std::size_t> intermediate = {0, 1});

/// The spectral oracle relabeled to coupled_projectors() order (j', j-1, j,
/// j+1); missing subspaces become zero matrices.
ProjectorSet spectral_coupled_projectors(HalfInteger j, Coupling coupling);

/// The spectral oracle relabeled to pair_projectors() order.
ProjectorSet spectral_pair_projectors(HalfInteger j);

/// Largest element-wise difference between label-aligned projector sets.
double max_projector_deviation(ProjectorSet const &a, ProjectorSet const &b);

/// Projector onto |psi-> = (|01> - |10>)/sqrt 2.
ComplexMatrix singlet_projector();

}  // namespace relparam
