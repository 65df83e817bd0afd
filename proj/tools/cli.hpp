// Copyright 2026 The nilcsp Authors
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

#ifndef NILCSP_TOOLS_CLI_HPP_
#define NILCSP_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nilcsp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFails = 1,
  kUsageOrParse = 2,
  kSemantic = 3,
};

/// Runs `nilcsp` with `args` (without the program name). Output goes to
/// `out`/`err`; the animator reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace nilcsp::cli

#endif  // NILCSP_TOOLS_CLI_HPP_
