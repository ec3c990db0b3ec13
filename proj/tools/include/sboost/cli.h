// Copyright 2026 The sboost Authors
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

#ifndef SBOOST_CLI_H_
#define SBOOST_CLI_H_

#include <ostream>

namespace sboost::cli {

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;  // data, I/O or runtime failure
inline constexpr int kExitUsage = 2;    // bad flags or configuration

// Runs the tool in-process. `argv[0]` is the program name.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sboost::cli

#endif  // SBOOST_CLI_H_
