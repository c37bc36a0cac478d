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

#include "relparam/quadrature.hpp"

#include "relparam/errors.hpp"

#include <cmath>
#include <numbers>

namespace relparam {

QuadratureRule gauss_legendre(int n)
{
  if (n < 1)
  {
    throw InvalidArgument("Gauss-Legendre rule needs at least one node");
  }
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  int const half = (n + 1) / 2;
  for (int i = 0; i < half; ++i)
  {
    double x  = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter)
    {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k)
      {
        double const p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0              = p1;
        p1              = p2;
      }
      dp              = n * (x * p1 - p0) / (x * x - 1.0);
      double const dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
      {
        break;
      }
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k)
    {
      double const p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0              = p1;
      p1              = p2;
    }
    dp              = n * (x * p1 - p0) / (x * x - 1.0);
    double const w  = 2.0 / ((1.0 - x * x) * dp * dp);
    auto const   lo = static_cast<std::size_t>(i);
    auto const   hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo]   = -x;
    rule.nodes[hi]   = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1)
  {
    rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  }
  return rule;
}

QuadratureRule endpoint_graded_rule(int n, double a, double b)
{
  QuadratureRule const base = gauss_legendre(n);
  QuadratureRule       rule;
  rule.nodes.reserve(base.nodes.size());
  rule.weights.reserve(base.nodes.size());
  double const half_width = 0.5 * (b - a);
  double const mid        = 0.5 * (a + b);
  for (std::size_t k = 0; k < base.nodes.size(); ++k)
  {
    double const t  = base.nodes[k];
    double const t2 = t * t;
    double const u  = 1.0 - t2;
    double const T  = 35.0 / 16.0 * t * (1.0 - t2 + 0.6 * t2 * t2 - t2 * t2 * t2 / 7.0);
    double const dT = 35.0 / 16.0 * u * u * u;
    rule.nodes.push_back(mid + half_width * T);
    rule.weights.push_back(half_width * dT * base.weights[k]);
  }
  return rule;
}

}  // namespace relparam
