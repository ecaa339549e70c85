// Copyright 2026 The tmkit Authors.
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

#ifndef TMKIT_TOOLS_CLI_H_
#define TMKIT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tmkit::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;  // validation errors or trace rejected
inline constexpr int kExitUsage = 2;     // usage, I/O or parse error

// Runs the command line `args` (without the program name). Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tmkit::cli

#endif  // TMKIT_TOOLS_CLI_H_
