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
#include "relparam/inference.hpp"
#include "relparam/povm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relparam {

/// One published quantity against its independently derived reference.
/// pass <=> |computed - reference| <= tolerance; the published value is shown
/// alongside and never enters the pass decision.
struct ComparisonRow
{
  std::string           name;
  std::optional<double> published;
  double                reference{0.0};
  double                computed{0.0};
  double                standard_error{0.0};
  double                tolerance{0.0};
  bool                  pass{false};
  std::string           note;
};

struct ReproduceConfig
{
  std::uint64_t samples{2'000'000};
  std::uint64_t seed{0};
  unsigned      workers{1};
  int           nodes_1d{256};
  int           nodes_3d{64};
  /// Nodes per axis for the reference quadrature the Monte Carlo rows are
  /// compared against.
  int                      reference_nodes{128};
  std::vector<HalfInteger> spin_sample{HalfInteger::from_twice(1), HalfInteger::from_twice(2),
                                       HalfInteger::from_twice(3), HalfInteger::from_twice(4),
                                       HalfInteger::from_twice(10)};
  HalfInteger asymptotic_j{HalfInteger::from_twice(100)};
  HalfInteger large_j{HalfInteger::from_twice(400)};
  Coupling    coupling{Coupling::QubitSpin};
};

/// Marginals of the spin-j POVM: (1/4, (2j-1)/(8j+4), 1/4, (2j+3)/(8j+4)).
std::array<double, 4> spinj_marginals(HalfInteger j) noexcept;

/// 1 - 1/(2 ln 2): gain of an outcome with likelihood proportional to 1 - c.
double singlet_gain_closed_form() noexcept;

/// 2 - (3/4) log2 3 - 1/(2 ln 2): average gain of the two-qubit pair POVM.
double qubit_pair_gain_closed_form() noexcept;

std::vector<ComparisonRow> reproduce(ReproduceConfig const &config);

bool all_pass(std::vector<ComparisonRow> const &rows) noexcept;

}  // namespace relparam
