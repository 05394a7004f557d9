// Copyright 2026 The Rotakit Authors
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

#ifndef ROTAKIT_CLI_H_
#define ROTAKIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace rotakit {

// Process exit codes of the rotakit tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitSolveFailure = 2;
inline constexpr int kExitTruncated = 3;
inline constexpr int kExitObstruction = 4;

// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rotakit

#endif  // ROTAKIT_CLI_H_
