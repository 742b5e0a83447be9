// Copyright 2026 The bruhatkit Authors.
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

#ifndef BRUHATKIT_TOOLS_COMMANDS_HPP_
#define BRUHATKIT_TOOLS_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bruhatkit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceCap = 3,
};

// Entry point shared by main() and the tests. `args` excludes the program
// name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bruhatkit::cli

#endif  // BRUHATKIT_TOOLS_COMMANDS_HPP_
