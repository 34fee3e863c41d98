// Copyright 2026 The posetop Authors
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

#ifndef POSETOP_CLI_HPP_
#define POSETOP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace posetop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;  // invalid matrix, failed check
inline constexpr int kExitUsage = 2;        // bad flags, unreadable input

// Runs one command line (without the program name), writing results to out
// and diagnostics to err. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace posetop

#endif  // POSETOP_CLI_HPP_
