// Copyright 2026 The sinkeq Authors
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

#ifndef SINKEQ_TOOLS_CLI_H_
#define SINKEQ_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace sinkeq::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;     // usage, schema, validation
inline constexpr int kExitUndefined = 2;   // degenerate welfare, no NE, not smooth
inline constexpr int kExitNumerical = 3;   // solver failure, witness not found

// Runs one command. `args` excludes the program name. The report goes to
// `out` in one write after all computation finished (or to --output via a
// temporary file and rename); diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace sinkeq::cli

#endif  // SINKEQ_TOOLS_CLI_H_
