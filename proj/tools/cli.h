// Copyright 2026 The Urysohn Authors
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

#ifndef URYSOHN_TOOLS_CLI_H_
#define URYSOHN_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace urysohn::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on pass, 1 on a verification failure and
/// 2 on usage, I/O or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace urysohn::cli

#endif  // URYSOHN_TOOLS_CLI_H_
