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

#include <span>
#include <vector>

namespace relparam {

/// Angular-momentum matrices in the |j, m> basis with m running from j down
/// to -j (index k <-> m = j - k), so the stretched state |j, j> is index 0.
struct SpinOperators
{
  ComplexMatrix x;
  ComplexMatrix y;
  ComplexMatrix z;

  /// Jx^2 + Jy^2 + Jz^2.
  ComplexMatrix casimir() const;
  /// J . n
  ComplexMatrix along(Direction const &n) const;
};

SpinOperators spin_operators(HalfInteger j);

/// Pauli matrices (twice the spin-1/2 operators).
SpinOperators pauli();

/// SU(2) coherent state: eigenvector of J.dir with eigenvalue j. The |j, j>
/// amplitude is real and non-negative; at dir = -z the |j, -j> amplitude is 1.
StateVector coherent_state(HalfInteger j, Direction const &dir);

/// Eigenvector of sigma.dir with eigenvalue +1.
StateVector qubit_state(Direction const &dir);

/// Basis vector |j, m> given 2m.
StateVector basis_state(HalfInteger j, int twice_m);

/// Condon-Shortley Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>. All
/// projections are passed as twice their value. Returns 0 when a selection
/// rule (triangle, |m| <= j, parity, M = m1 + m2) is violated.
double clebsch_gordan(HalfInteger j1, int twice_m1, HalfInteger j2, int twice_m2, HalfInteger J,
                      int twice_M);

/// exp(-i angle J.axis) on a single spin.
ComplexMatrix rotation_operator(HalfInteger j, Direction const &axis, double angle);

/// Same rotation applied to every factor of a tensor product space.
ComplexMatrix collective_rotation(Direction const &axis, double angle,
                                  std::span<HalfInteger const> spins);

/// Dimension of the product space.
int product_dimension(std::span<HalfInteger const> spins);

/// `op` acting on factor `which`, identity elsewhere.
ComplexMatrix embed(ComplexMatrix const &op, std::size_t which, std::span<HalfInteger const> spins);

/// Sum of the spin operators of the selected factors, on the full space.
SpinOperators total_spin_operators(std::span<HalfInteger const> spins,
                                   std::span<std::size_t const> factors);
SpinOperators total_spin_operators(std::span<HalfInteger const> spins);

/// J(a) . J(b) for two distinct factors.
ComplexMatrix spin_dot(std::span<HalfInteger const> spins, std::size_t a, std::size_t b);

}  // namespace relparam
