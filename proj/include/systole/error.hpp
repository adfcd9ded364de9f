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

#include <stdexcept>
#include <string>
#include <string_view>

namespace systole {

enum class ErrorKind {
  MalformedLine,
  NonPositiveLength,
  Disconnected,
  DuplicateEdgeId,
  InvalidGraph,
  ContractionOfCycle,
  NoCycle,
  BudgetExceeded,
  ForeignCycle,
  RankTooSmall,
  ParameterOutOfRange,
  DegenerateStage,
  CapExceeded,
  NotStrictlyShorter,
  NotCubic,
  InvalidMap,
  UnknownDataset,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Domain error: a mathematical refusal or invalid input, as opposed to a bug.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace systole
