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

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "systole/graph.hpp"
#include "systole/maps.hpp"

namespace systole {

using Dataset = std::variant<MetricGraph, CombinatorialMap>;

// Names of the bundled datasets, sorted.
const std::vector<std::string>& dataset_names();

// Throws Error(UnknownDataset) for names not in dataset_names().
Dataset bundled_dataset(std::string_view name);
std::string_view dataset_source(std::string_view name);
// Expected properties from the sidecar file, as key-value pairs.
std::map<std::string, std::string> dataset_properties(std::string_view name);

const MetricGraph& graph_of(const Dataset& d);

}  // namespace systole
