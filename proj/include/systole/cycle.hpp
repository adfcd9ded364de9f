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

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "systole/graph.hpp"

namespace systole {

// One traversal of an edge; forward means from edge.u to edge.v.
struct Step {
  EdgeId edge = 0;
  bool forward = true;

  auto operator<=>(const Step&) const = default;
};

// An embedded oriented closed curve: no repeated vertex, no repeated edge.
// A single loop edge is a valid cycle.
class Cycle {
 public:
  // Validates closure and embeddedness against g; keeps the given orientation
  // and starting point.
  static Cycle from_steps(const MetricGraph& g, std::vector<Step> steps);
  // Builds the canonical cycle on an edge set; throws if the set is not the
  // edge set of a single embedded cycle.
  static Cycle from_edge_set(const MetricGraph& g, const std::set<EdgeId>& edges);

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  std::vector<EdgeId> edge_sequence() const;
  std::set<EdgeId> edge_set() const;
  std::set<VertexId> vertex_set(const MetricGraph& g) const;

  Rational length(const MetricGraph& g) const;
  Rational length(const MetricGraph& g, std::span<const Rational> weights) const;

  // Rotation/reflection with the lexicographically smallest edge-id sequence;
  // ties (two-edge cycles, loops) are broken by a forward first step.
  Cycle canonical() const;
  bool is_canonical() const { return canonical() == *this; }
  Cycle reversed() const;

  // Same cycle up to starting point and orientation.
  bool same_curve(const Cycle& other) const { return canonical() == other.canonical(); }

  std::string to_string() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  explicit Cycle(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;
};

}  // namespace systole
