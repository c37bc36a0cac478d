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

#include <stdexcept>
#include <string>

namespace relparam {

/// Bad argument supplied by a caller (malformed half-integer, wrong scenario
/// kind for an operation, empty estimator budget, ...).
class InvalidArgument : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition on the numerical input does not hold, e.g. a
/// cosine triple whose Gram matrix is not positive semidefinite.
class PreconditionError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Internal numerical failure: non-finite intermediate values, eigenvalue
/// clusters that do not match any J(J+1), singular solver systems.
class NumericalError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace relparam
