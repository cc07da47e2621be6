// Copyright 2026 The circ Authors.
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

#ifndef CIRC_CLI_H_
#define CIRC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace circ {

// Exit statuses of the command line tool.
enum ExitCode : int {
  kExitOk = 0,         // success, query entailed, paths agree
  kExitNegative = 1,   // query not entailed, paths disagree
  kExitUsage = 2,
  kExitInput = 3,
  kExitResource = 4,
};

// Runs one command. `args` excludes the program name, e.g.
// {"models", "theory.circ", "--json"}.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace circ

#endif  // CIRC_CLI_H_
