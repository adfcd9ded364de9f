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

#include <optional>
#include <set>
#include <vector>

#include "systole/cycle.hpp"
#include "systole/cycles.hpp"
#include "systole/graph.hpp"
#include "systole/snf.hpp"

namespace systole {

using HomologyClass = std::vector<Integer>;

// H_1(g; Z) coordinates from a spanning tree: the class of a closed walk is
// its signed count of traversals of each chord.
class HomologyBasis {
 public:
  // Deterministic BFS tree from vertex 0, scanning incidences in edge-id order.
  static HomologyBasis build(const MetricGraph& g);

  const std::set<EdgeId>& tree_edges() const { return tree_; }
  const std::vector<EdgeId>& chords() const { return chords_; }
  std::size_t rank() const { return chords_.size(); }

  // Rows express the classes of the original graph's basis cycles in this
  // basis; identity unless the basis was carried through contractions.
  const IntMatrix& change_of_basis() const { return change_; }

  // The fundamental cycle of chord i (chord traversed forward).
  Cycle fundamental_cycle(const MetricGraph& g, std::size_t i) const;

 private:
  friend HomologyBasis rebase_after_contraction(const HomologyBasis&, const MetricGraph&,
                                                const Contraction&);
  std::set<EdgeId> tree_;
  std::vector<EdgeId> chords_;
  IntMatrix change_;
};

// Throws Error(ForeignCycle) if the cycle uses an edge absent from g.
HomologyClass cycle_class(const MetricGraph& g, const HomologyBasis& basis, const Cycle& c);
// Closed walks (not necessarily embedded); steps must connect.
HomologyClass walk_class(const MetricGraph& g, const HomologyBasis& basis,
                         std::span<const Step> steps);

// Basis for the contracted graph whose tree contains the contracted forest.
// change_of_basis() composes the old matrix with the (unimodular) matrix
// sending old basis cycles to new coordinates.
HomologyBasis rebase_after_contraction(const HomologyBasis& old_basis,
                                       const MetricGraph& old_graph,
                                       const Contraction& contraction);

struct LatticeVerdict {
  IntMatrix generators;           // one row per cycle class
  std::size_t ambient_rank = 0;   // n
  std::size_t rank = 0;
  std::vector<Integer> divisors;  // elementary divisors, ascending
  std::optional<Integer> index;   // nullopt means infinite index

  bool finite_index() const { return index.has_value(); }
};

bool operator==(const LatticeVerdict& a, const LatticeVerdict& b);

LatticeVerdict lattice_of(const IntMatrix& generators, std::size_t ambient_rank);
LatticeVerdict systole_lattice(const MetricGraph& g, const CycleSearchOptions& options = {});
LatticeVerdict cycle_lattice(const MetricGraph& g, std::span<const Cycle> cycles);

struct WellRoundedness {
  bool well_rounded = false;
  LatticeVerdict lattice;
};

WellRoundedness is_well_rounded(const MetricGraph& g, const CycleSearchOptions& options = {});

}  // namespace systole
