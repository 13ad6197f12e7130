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

#ifndef LIEPOLY_CLI_HPP
#define LIEPOLY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace liepoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. Data goes to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liepoly::cli

#endif  // LIEPOLY_CLI_HPP
