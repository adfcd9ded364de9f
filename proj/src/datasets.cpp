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

#include "systole/datasets.hpp"

#include <algorithm>
#include <sstream>

#include "systole/error.hpp"

namespace systole {

namespace detail {
// Generated at configure time from data/.
struct EmbeddedFile {
  std::string_view name;
  std::string_view text;
};
extern const EmbeddedFile kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;
}  // namespace detail

namespace {

std::string_view stem(std::string_view file) { return file.substr(0, file.rfind('.')); }
std::string_view suffix(std::string_view file) { return file.substr(file.rfind('.') + 1); }

const detail::EmbeddedFile* find_file(std::string_view name, std::string_view kind) {
  for (std::size_t i = 0; i < detail::kEmbeddedFileCount; ++i) {
    const auto& f = detail::kEmbeddedFiles[i];
    if (stem(f.name) == name && (kind.empty() ? suffix(f.name) != "props" : suffix(f.name) == kind)) {
      return &f;
    }
  }
  return nullptr;
}

const detail::EmbeddedFile& require(std::string_view name) {
  const auto* f = find_file(name, "");
  if (f == nullptr) throw Error(ErrorKind::UnknownDataset, "unknown dataset '" + std::string(name) + "'");
  return *f;
}

}  // namespace

const std::vector<std::string>& dataset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < detail::kEmbeddedFileCount; ++i) {
      const auto& f = detail::kEmbeddedFiles[i];
      if (suffix(f.name) != "props") out.emplace_back(stem(f.name));
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return names;
}

std::string_view dataset_source(std::string_view name) { return require(name).text; }

Dataset bundled_dataset(std::string_view name) {
  const auto& f = require(name);
  if (suffix(f.name) == "map") return parse_map(f.text);
  return parse_graph(f.text, GraphMode::OuterSpace);
}

std::map<std::string, std::string> dataset_properties(std::string_view name) {
  require(name);
  std::map<std::string, std::string> props;
  const auto* f = find_file(name, "props");
  if (f == nullptr) return props;
  std::istringstream in{std::string(f->text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string key, value;
    fields >> key >> value;
    if (!key.empty()) props[key] = value;
  }
  return props;
}

const MetricGraph& graph_of(const Dataset& d) {
  if (const auto* g = std::get_if<MetricGraph>(&d)) return *g;
  return std::get<CombinatorialMap>(d).graph();
}

}  // namespace systole
