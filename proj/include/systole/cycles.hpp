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

#include <cstddef>
#include <optional>
#include <vector>

#include "systole/cycle.hpp"
#include "systole/graph.hpp"

namespace systole {

struct CycleSearchOptions {
  // Enumeration aborts with Error(BudgetExceeded) past this many cycles.
  std::size_t cycle_cap = 10'000'000;
};

struct ShortestCycle {
  Rational length;
  Cycle witness;
};

// Weighted girth. Weights are indexed like g.edges() and must be >= 0; the
// witness is the canonically smallest cycle of minimum weight.
// Throws Error(NoCycle) on a forest.
ShortestCycle shortest_cycle(const MetricGraph& g, std::span<const Rational> weights,
                             const CycleSearchOptions& options = {});
ShortestCycle shortest_cycle(const MetricGraph& g, const CycleSearchOptions& options = {});

// Every embedded cycle of minimum length, canonical and sorted.
std::vector<Cycle> all_systoles(const MetricGraph& g, const CycleSearchOptions& options = {});
std::vector<Cycle> all_systoles(const MetricGraph& g, std::span<const Rational> weights,
                                const CycleSearchOptions& options = {});

// Every embedded cycle of weight <= bound, canonical and sorted.
std::vector<Cycle> cycles_up_to_length(const MetricGraph& g, const Rational& bound,
                                       const CycleSearchOptions& options = {});
std::vector<Cycle> cycles_up_to_length(const MetricGraph& g,
                                       std::span<const Rational> weights,
                                       const Rational& bound,
                                       const CycleSearchOptions& options = {});

// Minimum cycle weight strictly above threshold, with a witness; nullopt if
// no cycle is longer than threshold. Uses k-shortest simple paths (Yen) per
// edge, stopping once a path passes the threshold or the current best.
std::optional<ShortestCycle> shortest_cycle_above(const MetricGraph& g,
                                                  std::span<const Rational> weights,
                                                  const Rational& threshold);

// bridge[i] is true when edge i lies on no cycle.
std::vector<bool> find_bridges(const MetricGraph& g);

namespace detail {

// Girth with some minimum-weight witness (not necessarily canonical), via one
// Dijkstra per non-bridge edge. nullopt on a forest.
std::optional<ShortestCycle> girth_any_witness(const MetricGraph& g,
                                               std::span<const Rational> weights);

}  // namespace detail

}  // namespace systole
