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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace relparam {

/// Spin quantum number j stored as the integer 2j, so dimensions and
/// arithmetic never drift.
class HalfInteger
{
public:
  constexpr HalfInteger() = default;

  static HalfInteger from_twice(int twice_j);
  /// Nearest value for doubles that are exact multiples of 1/2, otherwise throws.
  static HalfInteger from_double(double j);
  /// Accepts "3/2", "1.5", "2", "0.5". Rejects anything that is not a
  /// non-negative multiple of 1/2.
  static HalfInteger parse(std::string_view text);
  static std::optional<HalfInteger> try_parse(std::string_view text) noexcept;

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  constexpr int dimension() const noexcept { return twice_ + 1; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  /// j + delta/2; returns std::nullopt when the result would be negative
  /// (e.g. j - 1 for j = 1/2, the empty subspace).
  std::optional<HalfInteger> shifted(int twice_delta) const noexcept;

  /// "1/2", "3", "5/2".
  std::string to_string() const;

  constexpr auto operator<=>(HalfInteger const &) const = default;

private:
  constexpr explicit HalfInteger(int twice_j) : twice_(twice_j) {}
  int twice_{0};
};

/// Shorthand for spin 1/2.
HalfInteger half();

}  // namespace relparam
