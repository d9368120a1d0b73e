// Copyright 2026 The vcew Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VCEW_TOOLS_CLI_HPP
#define VCEW_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vcew::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitVerification = 5;

/// Runs one command. `args` excludes the program name. Output is buffered
/// and written to `out` once the command finishes; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vcew::cli

#endif  // VCEW_TOOLS_CLI_HPP
