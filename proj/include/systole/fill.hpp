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

#include <set>
#include <vector>

#include "systole/cycles.hpp"
#include "systole/homology.hpp"

namespace systole {

// The union of the systoles: edges on some systole, their endpoints, and the
// total length of those edges.
struct SystoleSupport {
  std::set<EdgeId> edges;
  std::set<VertexId> vertices;
  Rational length;
  std::set<EdgeId> complement;  // edges on no systole
};

SystoleSupport systole_support(const MetricGraph& g, std::span<const Cycle> systoles);
SystoleSupport systole_support(const MetricGraph& g, const CycleSearchOptions& options = {});

// First Betti number of the support subgraph (possibly disconnected).
long support_betti_number(const MetricGraph& g, const SystoleSupport& support);

// Every component of the complement of the systole union is a tree; a cycle
// touching the union only at a vertex counts as meeting it.
bool topologically_fills(const MetricGraph& g, const SystoleSupport& support);
bool topologically_fills(const MetricGraph& g, const CycleSearchOptions& options = {});

bool geometrically_fills(const MetricGraph& g, const SystoleSupport& support);
bool geometrically_fills(const MetricGraph& g, const CycleSearchOptions& options = {});

struct Membership {
  bool in_W = false;       // systole classes have full rank in H_1
  bool in_V = false;       // systoles fill topologically
  bool in_Vprime = false;  // systoles cover the graph
  std::vector<Cycle> systoles;
  Rational systole_length;
  LatticeVerdict lattice;
  SystoleSupport support;
};

// Requires rank >= 2 and degrees >= 3; throws Error(RankTooSmall) or
// Error(InvalidGraph) otherwise. Checks the containments W ⊆ V and V' ⊆ V
// and throws Error(Internal) if they fail.
Membership classify_membership(const MetricGraph& g, const CycleSearchOptions& options = {});

}  // namespace systole
