// Copyright 2026 The qinv Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qinv::cli {

/// Process exit codes of the qinv tool.
enum ExitCode : int {
    kOk = 0,
    kFailed = 1,  ///< invariance check failed, or states distinguished
    kParseError = 2,
    kUnnormalized = 3,
    kQubitMismatch = 4,
    kUnwritable = 5,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qinv::cli
