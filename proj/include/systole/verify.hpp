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

#include <string>
#include <string_view>
#include <vector>

#include "systole/cycles.hpp"

namespace systole {

enum class CheckStatus { Pass, Fail, Conditional };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string summary;
  std::vector<std::string> details;
};

// Names of the bundled checks in report order.
std::vector<std::string> verification_check_names();

// Runs every check whose name contains `filter` (all when empty). Exceptions
// inside a check turn into a Fail result carrying the message.
std::vector<CheckResult> run_verification(std::string_view filter = {},
                                          const CycleSearchOptions& options = {});

}  // namespace systole
