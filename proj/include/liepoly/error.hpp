// Copyright 2026 The liepoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIEPOLY_ERROR_HPP
#define LIEPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liepoly {

/// Caller passed something outside an operation's precondition
/// (mismatched variable counts, composite moduli, out-of-budget fields).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant the library relies on did not hold. Either a
/// bug or a counterexample to a proved statement; never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace liepoly

#endif  // LIEPOLY_ERROR_HPP
