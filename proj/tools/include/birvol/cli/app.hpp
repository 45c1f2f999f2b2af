// Copyright 2026 The birvol Authors
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

#ifndef BIRVOL_CLI_APP_HPP_
#define BIRVOL_CLI_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace birvol::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kSchema = 2, kMath = 3 };

// Parses argv, dispatches one command, writes the JSON summary to `out`
// and diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace birvol::cli

#endif  // BIRVOL_CLI_APP_HPP_
