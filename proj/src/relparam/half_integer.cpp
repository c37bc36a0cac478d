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

#include "relparam/half_integer.hpp"

#include "relparam/errors.hpp"

#include <charconv>
#include <cmath>

namespace relparam {

HalfInteger HalfInteger::from_twice(int twice_j)
{
  if (twice_j < 0)
  {
    throw InvalidArgument("spin quantum number must be non-negative, got 2j = " +
                          std::to_string(twice_j));
  }
  return HalfInteger(twice_j);
}

HalfInteger HalfInteger::from_double(double j)
{
  double const twice = 2.0 * j;
  double const rounded = std::round(twice);
  if (!std::isfinite(j) || j < 0.0 || std::abs(twice - rounded) > 1e-9 || rounded > 1e8)
  {
    throw InvalidArgument("not a non-negative half-integer: " + std::to_string(j));
  }
  return HalfInteger(static_cast<int>(rounded));
}

namespace {

std::optional<long> parse_long(std::string_view s)
{
  long v = 0;
  auto const *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end)
  {
    return std::nullopt;
  }
  return v;
}

}  // namespace

std::optional<HalfInteger> HalfInteger::try_parse(std::string_view text) noexcept
{
  while (!text.empty() && text.front() == ' ')
  {
    text.remove_prefix(1);
  }
  while (!text.empty() && text.back() == ' ')
  {
    text.remove_suffix(1);
  }
  if (text.empty())
  {
    return std::nullopt;
  }

  if (auto slash = text.find('/'); slash != std::string_view::npos)
  {
    auto num = parse_long(text.substr(0, slash));
    auto den = parse_long(text.substr(slash + 1));
    if (!num || !den || *num < 0 || (*den != 1 && *den != 2) || *num > 100000000)
    {
      return std::nullopt;
    }
    return HalfInteger(static_cast<int>(*den == 1 ? 2 * *num : *num));
  }

  // Decimal form: integer part plus optional ".5" / ".0" style fraction.
  auto dot = text.find('.');
  auto whole = parse_long(text.substr(0, dot));
  if (!whole || *whole < 0 || *whole > 50000000)
  {
    return std::nullopt;
  }
  int twice = static_cast<int>(2 * *whole);
  if (dot != std::string_view::npos)
  {
    auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
    {
      return std::nullopt;
    }
    auto const first = frac.front();
    auto const rest  = frac.substr(1);
    if (rest.find_first_not_of('0') != std::string_view::npos || (first != '0' && first != '5'))
    {
      return std::nullopt;
    }
    if (first == '5')
    {
      twice += 1;
    }
  }
  return HalfInteger(twice);
}

HalfInteger HalfInteger::parse(std::string_view text)
{
  if (auto h = try_parse(text))
  {
    return *h;
  }
  throw InvalidArgument("not a valid half-integer spin: '" + std::string(text) + "'");
}

std::optional<HalfInteger> HalfInteger::shifted(int twice_delta) const noexcept
{
  int const t = twice_ + twice_delta;
  if (t < 0)
  {
    return std::nullopt;
  }
  return HalfInteger(t);
}

std::string HalfInteger::to_string() const
{
  if (is_integer())
  {
    return std::to_string(twice_ / 2);
  }
  return std::to_string(twice_) + "/2";
}

HalfInteger half()
{
  return HalfInteger::from_twice(1);
}

}  // namespace relparam
