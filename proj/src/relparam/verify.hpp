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

#include <cstdint>
#include <string>
#include <vector>

namespace relparam {

struct SuiteResult
{
  std::string              name;
  int                      passed{0};
  int                      total{0};
  double                   worst{0.0};  ///< largest residual seen
  std::vector<std::string> failures;

  bool ok() const noexcept { return passed == total; }
};

struct VerifySummary
{
  std::vector<SuiteResult> suites;

  bool all_pass() const noexcept;
  int  passed() const noexcept;
  int  total() const noexcept;
};

struct VerifyConfig
{
  std::vector<HalfInteger> spins{HalfInteger::from_twice(1),  HalfInteger::from_twice(2),
                                 HalfInteger::from_twice(3),  HalfInteger::from_twice(4),
                                 HalfInteger::from_twice(10), HalfInteger::from_twice(20),
                                 HalfInteger::from_twice(50)};
  int           rotations{100};
  std::uint64_t seed{0};
  double        tolerance{1e-10};
  double        cg_tolerance{1e-12};
  double        system_tolerance{1e-12};
};

/// Suites: projector-algebra, spectral-equivalence, linear-system,
/// cg-unitarity, rotation-invariance, oracle-equivalence, coherent-states.
VerifySummary run_verification(VerifyConfig const &config);

}  // namespace relparam
