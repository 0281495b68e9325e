// Copyright 2026 The gsynergy Authors
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

#ifndef GSYNERGY_CLI_H
#define GSYNERGY_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace gsynergy {

/// Exit statuses of the command line tool.
enum ExitCode : int {
    kExitOk = 0,     // success or true verdict
    kExitFalse = 1,  // false verdict / failed recipe
    kExitUsage = 2,  // usage, I/O or parse error
};

/// Entry point of the `gsyn` tool; args[0] is the program name.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gsynergy

#endif
