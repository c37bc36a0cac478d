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

#include <vector>

namespace relparam {

struct QuadratureRule
{
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// Gauss-Legendre composed with t -> T(t), T'(t) = 35/16 (1 - t^2)^3, on
/// [a, b]. The substitution flattens the integrand at both endpoints, which
/// restores fast convergence for p log p terms that vanish at an endpoint.
QuadratureRule endpoint_graded_rule(int n, double a = -1.0, double b = 1.0);

}  // namespace relparam
