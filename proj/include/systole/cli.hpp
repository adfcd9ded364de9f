// Copyright 2026 The systole Authors
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

#pragma once

#include <iosfwd>

namespace systole {

// Exit status of the command-line front end.
enum ExitStatus : int { kExitOk = 0, kExitDomainError = 1, kExitUsage = 2 };

// Runs the `systole` command line. Reports go to `out`; diagnostics go to
// `err` (and, with --json, a structured error object goes to `out` as well).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace systole
